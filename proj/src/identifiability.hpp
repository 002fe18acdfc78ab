#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace netid {

// The set U of externally driven vertices: r-excited w-nodes plus every
// e-node of the extended graph.
struct ExcitationSet {
    std::vector<NodeId> nodes; // sorted, unique
};

ExcitationSet excitation_set(const ExtendedGraph& g,
                             const std::vector<NodeId>& excited_w_nodes);
ExcitationSet excitation_set(const NetworkModelSpec& spec);

// Maximum number of pairwise vertex-disjoint directed paths from A to B.
// Disjointness includes endpoints; a single vertex counts as a path from
// itself to itself. Computed by unit-capacity vertex splitting + max flow.
int max_vertex_disjoint_paths(const ExtendedGraph& g, const std::vector<NodeId>& a,
                              const std::vector<NodeId>& b);

struct NodeCondition {
    NodeId node = 0;
    int required = 0; // |P_j|
    int achieved = 0; // disjoint-path count from U to P_j
    bool pass = false;
};

// Per-node record of the path-based sufficient condition. `overall` true
// means the sufficient condition for generic identifiability is met; false
// only means the condition is not met, never that the set is unidentifiable.
struct Certificate {
    std::vector<NodeCondition> nodes;
    bool overall = false;
};

Certificate verify_identifiability(const ExtendedGraph& g, const ExcitationSet& u);

// Randomized numeric cross-check: instantiates every edge weight at random,
// inverts (I - G) and returns the best numeric rank of the B-rows/A-columns
// submatrix over `trials` draws. Agrees with max_vertex_disjoint_paths for
// generic weights.
int generic_rank_oracle(const ExtendedGraph& g, const std::vector<NodeId>& a,
                        const std::vector<NodeId>& b, int trials, std::uint64_t seed);

} // namespace netid
