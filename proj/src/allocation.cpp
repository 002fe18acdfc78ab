#include "allocation.hpp"

#include <algorithm>
#include <set>

namespace netid {

std::optional<NodeId> existing_excitation(const Simug& t, const NetworkModelSpec& spec) {
    const std::set<NodeId> excited(spec.excited_nodes.begin(), spec.excited_nodes.end());
    for (NodeId root : t.roots) {
        if (root > spec.node_count) return root; // noise sources are always driven
        if (excited.count(root)) return root;
    }
    return std::nullopt;
}

namespace {

Covering cover_for_method(const ExtendedGraph& g, CoverMethod method) {
    switch (method) {
    case CoverMethod::simug:
        return reduce_covering(g);
    case CoverMethod::pseudotree_parametrized:
        return pseudotree_baseline(g, PseudotreeMode::parametrized_only);
    case CoverMethod::pseudotree_all:
        return pseudotree_baseline(g, PseudotreeMode::all_edges);
    }
    throw PreconditionError("unknown covering method");
}

Certificate check(const ExtendedGraph& g, const NetworkModelSpec& spec,
                  const std::vector<NodeId>& new_signals) {
    std::vector<NodeId> excited = spec.excited_nodes;
    excited.insert(excited.end(), new_signals.begin(), new_signals.end());
    return verify_identifiability(g, excitation_set(g, excited));
}

std::string failing_nodes(const Certificate& cert) {
    std::string s;
    for (const NodeCondition& c : cert.nodes) {
        if (c.pass) continue;
        if (!s.empty()) s += ", ";
        s += "w" + std::to_string(c.node);
    }
    return s;
}

} // namespace

AllocationPlan allocate_with_method(const NetworkModelSpec& spec, CoverMethod method) {
    const ExtendedGraph g = build_extended_graph(spec);

    AllocationPlan plan;
    plan.method = method;
    if (!g.edges.empty()) plan.covering = cover_for_method(g, method);

    const bool skip_fixed_only = method == CoverMethod::simug;
    std::set<NodeId> fresh;
    for (std::size_t k = 0; k < plan.covering.simugs.size(); ++k) {
        const Simug& t = plan.covering.simugs[k];
        if (skip_fixed_only && t.fixed_only()) {
            plan.skipped.push_back(static_cast<int>(k));
            continue;
        }
        if (auto tau = existing_excitation(t, spec)) {
            plan.reused.push_back({static_cast<int>(k), *tau});
            continue;
        }
        if (t.roots.empty())
            throw InternalError("covering unit without roots");
        fresh.insert(t.roots.front());
    }
    plan.new_signals.assign(fresh.begin(), fresh.end());
    plan.certificate = check(g, spec, plan.new_signals);

    if (!plan.certificate.overall && method == CoverMethod::simug) {
        // Fall back to exciting one root of every unit, skipped ones included.
        plan.fallback_used = true;
        plan.skipped.clear();
        plan.reused.clear();
        fresh.clear();
        for (std::size_t k = 0; k < plan.covering.simugs.size(); ++k) {
            const Simug& t = plan.covering.simugs[k];
            if (auto tau = existing_excitation(t, spec)) {
                plan.reused.push_back({static_cast<int>(k), *tau});
                continue;
            }
            fresh.insert(t.roots.front());
        }
        plan.new_signals.assign(fresh.begin(), fresh.end());
        plan.certificate = check(g, spec, plan.new_signals);
        if (!plan.certificate.overall)
            throw InternalError("allocation failed the path condition even with every "
                                "unit excited; failing nodes: " +
                                failing_nodes(plan.certificate));
    }
    return plan;
}

AllocationPlan allocate(const NetworkModelSpec& spec) {
    return allocate_with_method(spec, CoverMethod::simug);
}

AllocationPlan prune(AllocationPlan plan, const ExtendedGraph& g,
                     const NetworkModelSpec& spec) {
    if (!plan.certificate.overall)
        throw PreconditionError("prune requires a plan that passes the verifier");

    std::vector<NodeId> kept = plan.new_signals;
    for (NodeId candidate : plan.new_signals) {
        std::vector<NodeId> without;
        for (NodeId s : kept)
            if (s != candidate) without.push_back(s);
        if (check(g, spec, without).overall) kept = std::move(without);
    }
    plan.new_signals = kept;
    plan.certificate = check(g, spec, kept);
    plan.pruned = true;
    return plan;
}

ComparisonReport compare_with_baseline(const NetworkModelSpec& spec) {
    const ExtendedGraph g = build_extended_graph(spec);

    ComparisonReport report;
    report.simug = prune(allocate(spec), g, spec);
    report.pseudotree_parametrized =
        allocate_with_method(spec, CoverMethod::pseudotree_parametrized);
    report.pseudotree_all = allocate_with_method(spec, CoverMethod::pseudotree_all);
    return report;
}

} // namespace netid
