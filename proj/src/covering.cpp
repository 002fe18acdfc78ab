#include "covering.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace netid {

MergeSymbol merge_symbols(MergeSymbol a, MergeSymbol b, MergeMode mode) {
    using S = MergeSymbol;
    if (a == S::zero || b == S::zero) return S::zero;
    if (a == S::one && b == S::one) return S::one;
    if (a == S::empty && b == S::empty) return S::empty;
    // Exactly one operand is `one`, the other `empty`.
    if (mode == MergeMode::column) return S::one;
    return b; // row rule: the merged-into side decides
}

std::vector<Edge> Covering::covered_edges() const {
    std::vector<Edge> all;
    for (const Simug& t : simugs) all.insert(all.end(), t.edges.begin(), t.edges.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

bool counts_toward_bound(const Edge& e, IndegreeRule rule) {
    return rule == IndegreeRule::all_edges || e.kind == EdgeKind::parametrized;
}

// True when no head receives two bounded edges from the given edge list.
bool bound_holds(const std::vector<Edge>& edges, IndegreeRule rule) {
    std::set<NodeId> heads;
    for (const Edge& e : edges) {
        if (!counts_toward_bound(e, rule)) continue;
        if (!heads.insert(e.to).second) return false;
    }
    return true;
}

std::vector<Edge> union_edges(const Simug& t1, const Simug& t2) {
    std::vector<Edge> edges = t1.edges;
    edges.insert(edges.end(), t2.edges.begin(), t2.edges.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Vertices reachable from `start` along `edges`.
std::set<NodeId> reachable_from(NodeId start, const std::vector<Edge>& edges) {
    std::multimap<NodeId, NodeId> adj;
    for (const Edge& e : edges) adj.insert({e.from, e.to});
    std::set<NodeId> seen{start};
    std::queue<NodeId> q;
    q.push(start);
    while (!q.empty()) {
        NodeId v = q.front();
        q.pop();
        auto [lo, hi] = adj.equal_range(v);
        for (auto it = lo; it != hi; ++it) {
            if (seen.insert(it->second).second) q.push(it->second);
        }
    }
    return seen;
}

bool mergeable_impl(const Simug& t1, const Simug& t2, IndegreeRule rule) {
    if (t2.roots.empty()) return false;

    std::vector<Edge> edges = union_edges(t1, t2);
    if (!bound_holds(edges, rule)) return false;

    // Every root of the target must reach every vertex of the merged-in unit
    // within the union; that also makes the union multi-rooted.
    for (NodeId root : t2.roots) {
        std::set<NodeId> seen = reachable_from(root, edges);
        for (NodeId v : t1.vertices)
            if (!seen.count(v)) return false;
    }
    return true;
}

MergeSymbol direct_entry(const Simug& t1, const Simug& t2, IndegreeRule rule) {
    if (mergeable_impl(t1, t2, rule)) return MergeSymbol::one;
    if (bound_holds(union_edges(t1, t2), rule)) return MergeSymbol::empty;
    return MergeSymbol::zero;
}

CharacteristicMatrix direct_matrix(const Covering& cov, IndegreeRule rule,
                                   std::vector<NodeId> labels) {
    const int n = static_cast<int>(cov.simugs.size());
    CharacteristicMatrix m;
    m.entries.assign(n, std::vector<MergeSymbol>(n, MergeSymbol::zero));
    m.labels = std::move(labels);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.entries[i][j] = direct_entry(cov.simugs[i], cov.simugs[j], rule);
    return m;
}

std::vector<NodeId> star_roots(const ExtendedGraph& g) {
    std::vector<NodeId> roots;
    for (NodeId v = 1; v <= g.vertex_count(); ++v)
        if (!g.out_edges[v].empty()) roots.push_back(v);
    return roots;
}

bool unit_valid(const Simug& t, IndegreeRule rule) {
    return t.vertices.size() >= 2 && !t.roots.empty() && bound_holds(t.edges, rule);
}

} // namespace

Covering initial_covering(const ExtendedGraph& g) {
    if (g.edges.empty()) throw ValidationError("nothing to cover: graph has no edges");

    Covering cov;
    cov.target_edges = g.edges;
    for (NodeId v : star_roots(g)) cov.simugs.push_back(make_simug(g.out_edges[v]));
    return cov;
}

bool mergeable(const Simug& t1, const Simug& t2, const ExtendedGraph&) {
    return mergeable_impl(t1, t2, IndegreeRule::parametrized_only);
}

CharacteristicMatrix characteristic_matrix_direct(const Covering& cov,
                                                  const ExtendedGraph&) {
    std::vector<NodeId> labels;
    for (const Simug& t : cov.simugs)
        labels.push_back(t.roots.empty() ? t.vertices.front() : t.roots.front());
    return direct_matrix(cov, IndegreeRule::parametrized_only, std::move(labels));
}

PairingValue initial_pairing(const ExtendedGraph& g, NodeId star_i, NodeId star_j,
                             IndegreeRule rule) {
    const std::int64_t n = g.vertex_count();
    auto coefficient = [&](NodeId head, NodeId tail) -> std::int64_t {
        std::int64_t p = g.a_p[head][tail];
        std::int64_t f = g.a_f[head][tail];
        if (rule == IndegreeRule::all_edges) {
            p += f;
            f = 0;
        }
        return n * p - f;
    };

    PairingValue v;
    for (NodeId x = 1; x <= g.vertex_count(); ++x)
        v.re += coefficient(x, star_i) * coefficient(x, star_j);
    v.im = coefficient(star_i, star_j);
    return v;
}

CharacteristicMatrix initial_characteristic_matrix(const ExtendedGraph& g,
                                                   IndegreeRule rule) {
    const std::vector<NodeId> roots = star_roots(g);
    const int n = static_cast<int>(roots.size());
    const std::int64_t scale = g.vertex_count();

    CharacteristicMatrix m;
    m.entries.assign(n, std::vector<MergeSymbol>(n, MergeSymbol::zero));
    m.labels = roots;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const PairingValue v = initial_pairing(g, roots[i], roots[j], rule);
            if (v.re >= scale)
                m.entries[i][j] = MergeSymbol::zero;
            else
                m.entries[i][j] = v.im != 0 ? MergeSymbol::one : MergeSymbol::empty;
        }
    }
    return m;
}

std::pair<CharacteristicMatrix, Covering> merge_step(const CharacteristicMatrix& m,
                                                     const Covering& cov, int i, int j,
                                                     const ExtendedGraph&,
                                                     IndegreeRule rule) {
    const int n = m.size();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw PreconditionError("merge_step: invalid index pair");
    if (static_cast<int>(cov.simugs.size()) != n)
        throw PreconditionError("merge_step: matrix and covering sizes differ");
    if (m.entries[i][j] != MergeSymbol::one)
        throw PreconditionError("not mergeable: entry (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") is not one");

    Covering next_cov = cov;
    Simug merged = make_simug(union_edges(cov.simugs[i], cov.simugs[j]));
    if (!unit_valid(merged, rule))
        throw InternalError("merge produced an invalid unit");
    next_cov.simugs[j] = std::move(merged);
    next_cov.simugs.erase(next_cov.simugs.begin() + i);

    CharacteristicMatrix next = m;
    for (int x = 0; x < n; ++x) {
        next.entries[j][x] = merge_symbols(m.entries[i][x], m.entries[j][x], MergeMode::row);
        next.entries[x][j] =
            merge_symbols(m.entries[x][i], m.entries[x][j], MergeMode::column);
    }
    next.entries.erase(next.entries.begin() + i);
    for (auto& row : next.entries) row.erase(row.begin() + i);
    next.labels.erase(next.labels.begin() + i);

    const int jj = j > i ? j - 1 : j;
    next.entries[jj][jj] = MergeSymbol::zero;
    return {std::move(next), std::move(next_cov)};
}

namespace {

// Row selection: exactly-one-`one` rows first, then the row with the most
// `empty` entries among rows that still hold a `one`. Lowest indices win ties.
struct MergeChoice {
    int row = -1;
    int col = -1;
};

MergeChoice choose_merge(const CharacteristicMatrix& m) {
    const int n = m.size();
    MergeChoice best;
    int best_empties = -1;
    for (int r = 0; r < n; ++r) {
        int ones = 0;
        int empties = 0;
        int first_one = -1;
        for (int c = 0; c < n; ++c) {
            if (m.entries[r][c] == MergeSymbol::one) {
                ++ones;
                if (first_one < 0) first_one = c;
            } else if (m.entries[r][c] == MergeSymbol::empty) {
                ++empties;
            }
        }
        if (ones == 1) return {r, first_one};
        if (ones > 0 && empties > best_empties) {
            best = {r, first_one};
            best_empties = empties;
        }
    }
    return best;
}

} // namespace

ReduceTrace reduce_covering_traced(const ExtendedGraph& g, IndegreeRule rule) {
    ReduceTrace trace;
    trace.initial = initial_covering(g);
    trace.initial_matrix = initial_characteristic_matrix(g, rule);

    CharacteristicMatrix m = trace.initial_matrix;
    Covering cov = trace.initial;
    while (true) {
        const MergeChoice pick = choose_merge(m);
        if (pick.row < 0) break;
        auto [next_m, next_cov] = merge_step(m, cov, pick.row, pick.col, g, rule);
        m = std::move(next_m);
        cov = std::move(next_cov);
        trace.steps.push_back({pick.row, pick.col, m, cov});
    }
    return trace;
}

Covering reduce_covering(const ExtendedGraph& g) {
    return reduce_covering_traced(g, IndegreeRule::parametrized_only).result();
}

ExtendedGraph subgraph_with_edges(const ExtendedGraph& g, std::vector<Edge> edges) {
    NetworkModelSpec spec;
    spec.node_count = g.w_count;
    spec.noise_count = g.e_count;
    for (Edge& e : edges) {
        if (e.from <= g.w_count)
            spec.module_edges.push_back(e);
        else
            spec.noise_edges.push_back(e);
    }
    return build_extended_graph(spec);
}

Covering pseudotree_baseline(const ExtendedGraph& g, PseudotreeMode mode) {
    if (g.edges.empty()) throw ValidationError("nothing to cover: graph has no edges");
    if (mode == PseudotreeMode::all_edges)
        return reduce_covering_traced(g, IndegreeRule::all_edges).result();

    ExtendedGraph remainder = subgraph_with_edges(g, g.parametrized_edges());
    if (remainder.edges.empty()) return Covering{};
    return reduce_covering_traced(remainder, IndegreeRule::all_edges).result();
}

bool covering_valid(const Covering& cov, IndegreeRule rule) {
    for (const Simug& t : cov.simugs) {
        if (!unit_valid(t, rule)) return false;
        if (t.roots != compute_roots(t.vertices, t.edges)) return false;
    }
    for (std::size_t i = 0; i < cov.simugs.size(); ++i)
        for (std::size_t j = i + 1; j < cov.simugs.size(); ++j)
            if (!edge_disjoint(cov.simugs[i], cov.simugs[j])) return false;

    std::vector<Edge> target = cov.target_edges;
    std::sort(target.begin(), target.end());
    return cov.covered_edges() == target;
}

} // namespace netid
