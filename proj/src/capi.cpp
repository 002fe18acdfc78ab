#include "netid.h"

#include <cstring>
#include <memory>
#include <string>

#include "allocation.hpp"
#include "covering.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "identifiability.hpp"

using namespace netid;

struct netid_spec {
    NetworkModelSpec spec;
};

struct netid_certificate {
    Certificate cert;
};

struct netid_covering {
    Covering covering;
};

struct netid_plan {
    AllocationPlan plan;
    netid_covering covering_view;
    netid_certificate certificate_view;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& message) { t_last_error = message; }

netid_status fail(netid_status code, const std::string& message) {
    set_error(message);
    return code;
}

// Runs `fn` translating exceptions into status codes.
template <typename Fn>
netid_status guarded(Fn&& fn) {
    try {
        fn();
        return NETID_OK;
    } catch (const ValidationError& e) {
        return fail(NETID_ERR_VALIDATION, e.what());
    } catch (const PreconditionError& e) {
        return fail(NETID_ERR_INVALID_ARGUMENT, e.what());
    } catch (const NumericError& e) {
        return fail(NETID_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(NETID_ERR_INTERNAL, e.what());
    }
}

std::vector<NodeId> to_nodes(const int* data, int len) {
    return {data, data + len};
}

CoverMethod to_method(netid_method method) {
    switch (method) {
    case NETID_METHOD_SIMUG:
        return CoverMethod::simug;
    case NETID_METHOD_PSEUDOTREE_PARAMETRIZED:
        return CoverMethod::pseudotree_parametrized;
    case NETID_METHOD_PSEUDOTREE_ALL:
        return CoverMethod::pseudotree_all;
    }
    throw PreconditionError("unknown method value");
}

const Simug* unit_at(const netid_covering* cov, int unit) {
    if (!cov || unit < 0 || unit >= static_cast<int>(cov->covering.simugs.size()))
        return nullptr;
    return &cov->covering.simugs[unit];
}

} // namespace

extern "C" {

const char* netid_version(void) { return "0.1.0"; }

const char* netid_last_error(void) { return t_last_error.c_str(); }

netid_status netid_spec_create(int node_count, int noise_count, netid_spec** out) {
    if (!out) return fail(NETID_ERR_INVALID_ARGUMENT, "out pointer is null");
    if (node_count < 1)
        return fail(NETID_ERR_VALIDATION, "node count must be at least 1");
    if (noise_count < 0)
        return fail(NETID_ERR_VALIDATION, "noise source count must be nonnegative");
    auto* handle = new netid_spec;
    handle->spec.node_count = node_count;
    handle->spec.noise_count = noise_count;
    *out = handle;
    return NETID_OK;
}

void netid_spec_destroy(netid_spec* spec) { delete spec; }

netid_status netid_spec_add_edge(netid_spec* spec, int from, int to,
                                 netid_edge_kind kind) {
    if (!spec) return fail(NETID_ERR_INVALID_ARGUMENT, "spec handle is null");
    return guarded([&] {
        Edge e{from, to,
               kind == NETID_EDGE_FIXED ? EdgeKind::fixed : EdgeKind::parametrized};
        NetworkModelSpec candidate = spec->spec;
        candidate.module_edges.push_back(e);
        validate_spec(candidate);
        spec->spec = std::move(candidate);
    });
}

netid_status netid_spec_add_noise_edge(netid_spec* spec, int source, int to,
                                       netid_edge_kind kind) {
    if (!spec) return fail(NETID_ERR_INVALID_ARGUMENT, "spec handle is null");
    return guarded([&] {
        if (source < 1 || source > spec->spec.noise_count)
            throw ValidationError("noise source number out of range: " +
                                  std::to_string(source));
        Edge e{spec->spec.node_count + source, to,
               kind == NETID_EDGE_FIXED ? EdgeKind::fixed : EdgeKind::parametrized};
        NetworkModelSpec candidate = spec->spec;
        candidate.noise_edges.push_back(e);
        validate_spec(candidate);
        spec->spec = std::move(candidate);
    });
}

netid_status netid_spec_add_excited(netid_spec* spec, int node) {
    if (!spec) return fail(NETID_ERR_INVALID_ARGUMENT, "spec handle is null");
    return guarded([&] {
        NetworkModelSpec candidate = spec->spec;
        candidate.excited_nodes.push_back(node);
        validate_spec(candidate);
        spec->spec = std::move(candidate);
    });
}

netid_status netid_spec_validate(const netid_spec* spec) {
    if (!spec) return fail(NETID_ERR_INVALID_ARGUMENT, "spec handle is null");
    return guarded([&] { validate_spec(spec->spec); });
}

int netid_spec_node_count(const netid_spec* spec) {
    return spec ? spec->spec.node_count : 0;
}

int netid_spec_noise_count(const netid_spec* spec) {
    return spec ? spec->spec.noise_count : 0;
}

netid_status netid_verify(const netid_spec* spec, const int* excited_override,
                          int override_len, netid_certificate** out) {
    if (!spec || !out) return fail(NETID_ERR_INVALID_ARGUMENT, "null argument");
    if (override_len > 0 && !excited_override)
        return fail(NETID_ERR_INVALID_ARGUMENT, "override list is null");
    return guarded([&] {
        const ExtendedGraph g = build_extended_graph(spec->spec);
        std::vector<NodeId> excited = override_len >= 0
                                          ? to_nodes(excited_override, override_len)
                                          : spec->spec.excited_nodes;
        for (NodeId v : excited)
            if (v < 1 || v > spec->spec.node_count)
                throw ValidationError("excited node out of range: " + std::to_string(v));
        auto* handle = new netid_certificate;
        handle->cert = verify_identifiability(g, excitation_set(g, excited));
        *out = handle;
    });
}

void netid_certificate_destroy(netid_certificate* cert) { delete cert; }

int netid_certificate_overall(const netid_certificate* cert) {
    return cert && cert->cert.overall ? 1 : 0;
}

int netid_certificate_size(const netid_certificate* cert) {
    return cert ? static_cast<int>(cert->cert.nodes.size()) : 0;
}

netid_status netid_certificate_entry(const netid_certificate* cert, int index, int* node,
                                     int* required, int* achieved, int* pass) {
    if (!cert || index < 0 || index >= netid_certificate_size(cert))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad certificate index");
    const NodeCondition& c = cert->cert.nodes[index];
    if (node) *node = c.node;
    if (required) *required = c.required;
    if (achieved) *achieved = c.achieved;
    if (pass) *pass = c.pass ? 1 : 0;
    return NETID_OK;
}

netid_status netid_max_disjoint_paths(const netid_spec* spec, const int* from,
                                      int from_len, const int* to, int to_len, int* out) {
    if (!spec || !out || from_len < 0 || to_len < 0)
        return fail(NETID_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ExtendedGraph g = build_extended_graph(spec->spec);
        *out = max_vertex_disjoint_paths(g, to_nodes(from, from_len),
                                         to_nodes(to, to_len));
    });
}

netid_status netid_generic_rank(const netid_spec* spec, const int* from, int from_len,
                                const int* to, int to_len, int trials, uint64_t seed,
                                int* out) {
    if (!spec || !out || from_len < 0 || to_len < 0)
        return fail(NETID_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ExtendedGraph g = build_extended_graph(spec->spec);
        *out = generic_rank_oracle(g, to_nodes(from, from_len), to_nodes(to, to_len),
                                   trials, seed);
    });
}

netid_status netid_cover(const netid_spec* spec, netid_method method,
                         netid_covering** out) {
    if (!spec || !out) return fail(NETID_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ExtendedGraph g = build_extended_graph(spec->spec);
        auto* handle = new netid_covering;
        switch (to_method(method)) {
        case CoverMethod::simug:
            handle->covering = reduce_covering(g);
            break;
        case CoverMethod::pseudotree_parametrized:
            handle->covering = pseudotree_baseline(g, PseudotreeMode::parametrized_only);
            break;
        case CoverMethod::pseudotree_all:
            handle->covering = pseudotree_baseline(g, PseudotreeMode::all_edges);
            break;
        }
        *out = handle;
    });
}

void netid_covering_destroy(netid_covering* cov) { delete cov; }

int netid_covering_size(const netid_covering* cov) {
    return cov ? static_cast<int>(cov->covering.simugs.size()) : 0;
}

int netid_covering_vertex_count(const netid_covering* cov, int unit) {
    const Simug* t = unit_at(cov, unit);
    return t ? static_cast<int>(t->vertices.size()) : 0;
}

netid_status netid_covering_vertex(const netid_covering* cov, int unit, int index,
                                   int* out) {
    const Simug* t = unit_at(cov, unit);
    if (!t || !out || index < 0 || index >= static_cast<int>(t->vertices.size()))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad covering vertex index");
    *out = t->vertices[index];
    return NETID_OK;
}

int netid_covering_edge_count(const netid_covering* cov, int unit) {
    const Simug* t = unit_at(cov, unit);
    return t ? static_cast<int>(t->edges.size()) : 0;
}

netid_status netid_covering_edge(const netid_covering* cov, int unit, int index,
                                 int* from, int* to, netid_edge_kind* kind) {
    const Simug* t = unit_at(cov, unit);
    if (!t || index < 0 || index >= static_cast<int>(t->edges.size()))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad covering edge index");
    const Edge& e = t->edges[index];
    if (from) *from = e.from;
    if (to) *to = e.to;
    if (kind)
        *kind = e.kind == EdgeKind::fixed ? NETID_EDGE_FIXED : NETID_EDGE_PARAMETRIZED;
    return NETID_OK;
}

int netid_covering_root_count(const netid_covering* cov, int unit) {
    const Simug* t = unit_at(cov, unit);
    return t ? static_cast<int>(t->roots.size()) : 0;
}

netid_status netid_covering_root(const netid_covering* cov, int unit, int index,
                                 int* out) {
    const Simug* t = unit_at(cov, unit);
    if (!t || !out || index < 0 || index >= static_cast<int>(t->roots.size()))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad covering root index");
    *out = t->roots[index];
    return NETID_OK;
}

netid_status netid_allocate(const netid_spec* spec, netid_method method, int prune_flag,
                            netid_plan** out) {
    if (!spec || !out) return fail(NETID_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const CoverMethod m = to_method(method);
        AllocationPlan plan = allocate_with_method(spec->spec, m);
        if (prune_flag && m == CoverMethod::simug && plan.certificate.overall) {
            const ExtendedGraph g = build_extended_graph(spec->spec);
            plan = prune(std::move(plan), g, spec->spec);
        }
        auto* handle = new netid_plan;
        handle->covering_view.covering = plan.covering;
        handle->certificate_view.cert = plan.certificate;
        handle->plan = std::move(plan);
        *out = handle;
    });
}

void netid_plan_destroy(netid_plan* plan) { delete plan; }

int netid_plan_new_signal_count(const netid_plan* plan) {
    return plan ? static_cast<int>(plan->plan.new_signals.size()) : 0;
}

netid_status netid_plan_new_signal(const netid_plan* plan, int index, int* out) {
    if (!plan || !out || index < 0 || index >= netid_plan_new_signal_count(plan))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad signal index");
    *out = plan->plan.new_signals[index];
    return NETID_OK;
}

int netid_plan_reused_count(const netid_plan* plan) {
    return plan ? static_cast<int>(plan->plan.reused.size()) : 0;
}

netid_status netid_plan_reused(const netid_plan* plan, int index, int* unit, int* node) {
    if (!plan || index < 0 || index >= netid_plan_reused_count(plan))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad reuse index");
    if (unit) *unit = plan->plan.reused[index].simug_index;
    if (node) *node = plan->plan.reused[index].node;
    return NETID_OK;
}

int netid_plan_skipped_count(const netid_plan* plan) {
    return plan ? static_cast<int>(plan->plan.skipped.size()) : 0;
}

netid_status netid_plan_skipped(const netid_plan* plan, int index, int* unit) {
    if (!plan || !unit || index < 0 || index >= netid_plan_skipped_count(plan))
        return fail(NETID_ERR_INVALID_ARGUMENT, "bad skip index");
    *unit = plan->plan.skipped[index];
    return NETID_OK;
}

int netid_plan_fallback_used(const netid_plan* plan) {
    return plan && plan->plan.fallback_used ? 1 : 0;
}

const netid_covering* netid_plan_covering(const netid_plan* plan) {
    return plan ? &plan->covering_view : nullptr;
}

const netid_certificate* netid_plan_certificate(const netid_plan* plan) {
    return plan ? &plan->certificate_view : nullptr;
}

} // extern "C"
