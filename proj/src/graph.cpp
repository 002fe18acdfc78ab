#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace netid {

std::string edge_to_string(const Edge& e) {
    std::string s = std::to_string(e.from) + "->" + std::to_string(e.to);
    s += e.kind == EdgeKind::parametrized ? " (parametrized)" : " (fixed)";
    return s;
}

std::vector<Edge> ExtendedGraph::parametrized_edges() const {
    std::vector<Edge> r;
    for (const Edge& e : edges)
        if (e.kind == EdgeKind::parametrized) r.push_back(e);
    return r;
}

std::vector<Edge> ExtendedGraph::fixed_edges() const {
    std::vector<Edge> r;
    for (const Edge& e : edges)
        if (e.kind == EdgeKind::fixed) r.push_back(e);
    return r;
}

bool Simug::contains_vertex(NodeId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Simug::fixed_only() const {
    return std::all_of(edges.begin(), edges.end(),
                       [](const Edge& e) { return e.kind == EdgeKind::fixed; });
}

void validate_spec(const NetworkModelSpec& spec) {
    if (spec.node_count < 1)
        throw ValidationError("node count must be at least 1");
    if (spec.noise_count < 0)
        throw ValidationError("noise source count must be nonnegative");

    const int L = spec.node_count;
    const int n = spec.vertex_count();

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& e : spec.module_edges) {
        if (e.from < 1 || e.from > L || e.to < 1 || e.to > L)
            throw ValidationError("module edge out of range: " + edge_to_string(e));
        if (e.from == e.to)
            throw ValidationError("self-loop not allowed: " + edge_to_string(e));
        if (!seen.insert({e.from, e.to}).second)
            throw ValidationError("duplicate edge: " + edge_to_string(e));
    }
    for (const Edge& e : spec.noise_edges) {
        if (e.from <= L || e.from > n)
            throw ValidationError("noise edge must start at a noise source: " +
                                  edge_to_string(e));
        if (e.to < 1 || e.to > L)
            throw ValidationError("noise edge must end at an internal node: " +
                                  edge_to_string(e));
        if (!seen.insert({e.from, e.to}).second)
            throw ValidationError("duplicate edge: " + edge_to_string(e));
    }
    for (NodeId v : spec.excited_nodes) {
        if (v < 1 || v > L)
            throw ValidationError("excited node out of range: " + std::to_string(v));
    }
}

ExtendedGraph build_extended_graph(const NetworkModelSpec& spec) {
    validate_spec(spec);

    ExtendedGraph g;
    g.w_count = spec.node_count;
    g.e_count = spec.noise_count;

    g.edges = spec.module_edges;
    g.edges.insert(g.edges.end(), spec.noise_edges.begin(), spec.noise_edges.end());
    std::sort(g.edges.begin(), g.edges.end());

    const int n = g.vertex_count();
    g.a_p.assign(n + 1, std::vector<int>(n + 1, 0));
    g.a_f.assign(n + 1, std::vector<int>(n + 1, 0));
    g.out_edges.assign(n + 1, {});
    g.in_edges.assign(n + 1, {});

    for (const Edge& e : g.edges) {
        auto& a = e.kind == EdgeKind::parametrized ? g.a_p : g.a_f;
        a[e.to][e.from] = 1;
        g.out_edges[e.from].push_back(e);
        g.in_edges[e.to].push_back(e);
    }
    return g;
}

std::vector<NodeId> parametrized_in_set(const ExtendedGraph& g, NodeId j) {
    if (!g.is_w_node(j))
        throw PreconditionError("parametrized in-set requested for non-internal node " +
                                std::to_string(j));
    std::vector<NodeId> tails;
    for (const Edge& e : g.in_edges[j])
        if (e.kind == EdgeKind::parametrized) tails.push_back(e.from);
    std::sort(tails.begin(), tails.end());
    return tails;
}

namespace {

// Reachable set of `start` restricted to `vertices` using `edges`.
int count_reachable(NodeId start, const std::vector<NodeId>& vertices,
                    const std::vector<Edge>& edges) {
    std::set<NodeId> allowed(vertices.begin(), vertices.end());
    std::set<NodeId> seen{start};
    std::queue<NodeId> q;
    q.push(start);
    while (!q.empty()) {
        NodeId v = q.front();
        q.pop();
        for (const Edge& e : edges) {
            if (e.from != v) continue;
            if (!allowed.count(e.to) || seen.count(e.to)) continue;
            seen.insert(e.to);
            q.push(e.to);
        }
    }
    return static_cast<int>(seen.size());
}

bool indegree_bound_holds(const std::vector<Edge>& edges, bool count_all_kinds) {
    std::set<NodeId> heads;
    for (const Edge& e : edges) {
        if (!count_all_kinds && e.kind != EdgeKind::parametrized) continue;
        if (!heads.insert(e.to).second) return false;
    }
    return true;
}

} // namespace

std::vector<NodeId> compute_roots(const std::vector<NodeId>& vertices,
                                  const std::vector<Edge>& edges) {
    std::vector<NodeId> roots;
    const int total = static_cast<int>(vertices.size());
    for (NodeId v : vertices)
        if (count_reachable(v, vertices, edges) == total) roots.push_back(v);
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_simug(const std::vector<NodeId>& vertices, const std::vector<Edge>& edges) {
    if (vertices.size() < 2) return false;
    if (!indegree_bound_holds(edges, /*count_all_kinds=*/false)) return false;
    return !compute_roots(vertices, edges).empty();
}

bool is_pseudotree(const std::vector<NodeId>& vertices, const std::vector<Edge>& edges) {
    if (vertices.size() < 2) return false;
    if (!indegree_bound_holds(edges, /*count_all_kinds=*/true)) return false;
    return !compute_roots(vertices, edges).empty();
}

Simug make_simug(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::set<NodeId> vs;
    for (const Edge& e : edges) {
        vs.insert(e.from);
        vs.insert(e.to);
    }
    Simug t;
    t.vertices.assign(vs.begin(), vs.end());
    t.edges = std::move(edges);
    t.roots = compute_roots(t.vertices, t.edges);
    return t;
}

bool edge_disjoint(const Simug& t1, const Simug& t2) {
    std::set<std::pair<NodeId, NodeId>> e1;
    for (const Edge& e : t1.edges) e1.insert({e.from, e.to});
    for (const Edge& e : t2.edges)
        if (e1.count({e.from, e.to})) return false;

    // Every vertex's outgoing edges within the union must live in one side.
    std::set<NodeId> tails1, tails2;
    for (const Edge& e : t1.edges) tails1.insert(e.from);
    for (const Edge& e : t2.edges) tails2.insert(e.from);
    for (NodeId v : tails1)
        if (tails2.count(v)) return false;
    return true;
}

} // namespace netid
