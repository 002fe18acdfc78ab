#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace netid {

// Symbol alphabet of the mergeability matrix: `one` = row unit can be merged
// into column unit, `zero` = never (a node would exceed its indegree bound),
// `empty` = no conflict but no connecting structure either.
enum class MergeSymbol { one, zero, empty };

enum class MergeMode { column, row };

// Entrywise combination rules used when two units merge. The column operator
// is commutative; the row operator differs exactly on the (one, empty) pairs,
// where the merged-into side (second argument) wins.
MergeSymbol merge_symbols(MergeSymbol a, MergeSymbol b, MergeMode mode);

// Which edges count toward the one-incoming-edge bound. SIMUG coverings only
// bound parametrized edges; pseudotree coverings bound every edge.
enum class IndegreeRule { parametrized_only, all_edges };

struct CharacteristicMatrix {
    std::vector<std::vector<MergeSymbol>> entries;
    // Star vertex each index originated from; a merge keeps the target label.
    std::vector<NodeId> labels;

    int size() const { return static_cast<int>(entries.size()); }
};

struct Covering {
    std::vector<Simug> simugs;
    std::vector<Edge> target_edges; // what this covering is supposed to cover

    std::vector<Edge> covered_edges() const;
};

// One star per vertex that has outgoing edges: the vertex plus all of its
// out-edges. Throws on an edgeless graph.
Covering initial_covering(const ExtendedGraph& g);

// True when t1 can be merged into t2: the union is again a SIMUG and every
// root of t2 reaches every vertex of t1 inside the union.
bool mergeable(const Simug& t1, const Simug& t2, const ExtendedGraph& g);

// Entry (i, j): one if simugs[i] is mergeable into simugs[j]; empty if the
// union violates no indegree bound; zero otherwise. Diagonal is zero.
CharacteristicMatrix characteristic_matrix_direct(const Covering& cov,
                                                  const ExtendedGraph& g);

// Complex pairing of adjacency columns that classifies a star pair in one
// arithmetic step: the real part detects indegree conflicts, the imaginary
// part detects an edge from the column star onto the row star's root.
struct PairingValue {
    std::int64_t re = 0;
    std::int64_t im = 0;
};
PairingValue initial_pairing(const ExtendedGraph& g, NodeId star_i, NodeId star_j,
                             IndegreeRule rule = IndegreeRule::parametrized_only);

// Characteristic matrix of the star covering computed from the adjacency
// matrices alone; must agree with characteristic_matrix_direct on it.
CharacteristicMatrix initial_characteristic_matrix(
    const ExtendedGraph& g, IndegreeRule rule = IndegreeRule::parametrized_only);

// Merges unit i into unit j: the covering replaces both by their union with
// roots recomputed, the matrix folds row i into row j and column i into
// column j, then drops index i. Requires entry (i, j) to be one.
std::pair<CharacteristicMatrix, Covering> merge_step(
    const CharacteristicMatrix& m, const Covering& cov, int i, int j,
    const ExtendedGraph& g, IndegreeRule rule = IndegreeRule::parametrized_only);

struct ReduceStep {
    int from_index = 0; // matrix index merged away (before deletion)
    int into_index = 0;
    CharacteristicMatrix matrix; // state after the step
    Covering covering;
};

struct ReduceTrace {
    CharacteristicMatrix initial_matrix;
    Covering initial;
    std::vector<ReduceStep> steps;

    const Covering& result() const { return steps.empty() ? initial : steps.back().covering; }
};

// Greedy reduction: keep merging while any `one` entry exists, preferring
// rows with exactly one `one`, then rows with the most `empty` entries.
// Ties break toward the lowest row index, then the lowest column index.
ReduceTrace reduce_covering_traced(const ExtendedGraph& g,
                                   IndegreeRule rule = IndegreeRule::parametrized_only);

Covering reduce_covering(const ExtendedGraph& g);

enum class PseudotreeMode { all_edges, parametrized_only };

// The same machinery under the pseudotree indegree rule. In parametrized_only
// mode the fixed edges are removed first and only the remaining subgraph is
// covered; an empty covering is returned when nothing is left.
Covering pseudotree_baseline(const ExtendedGraph& g, PseudotreeMode mode);

// Graph restricted to the given edges (vertex set unchanged).
ExtendedGraph subgraph_with_edges(const ExtendedGraph& g, std::vector<Edge> edges);

// Validity of a covering under the given rule: member units valid, pairwise
// edge-disjoint, and their edges exactly cover target_edges.
bool covering_valid(const Covering& cov, IndegreeRule rule);

} // namespace netid
