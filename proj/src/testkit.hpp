#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace netid::testkit {

// Exhaustive maximum family of pairwise vertex-disjoint A-to-B paths,
// including single-vertex paths. Only for graphs with at most 10 vertices.
int brute_force_vdp(const ExtendedGraph& g, const std::vector<NodeId>& a,
                    const std::vector<NodeId>& b);

// Smallest set of additional fresh signals (cardinality first, then
// lexicographic) whose excitation set passes the path verifier, searching
// sizes 0..k_max. Absent when no set within the size bound works.
std::optional<std::vector<NodeId>> exhaustive_min_allocation(
    const ExtendedGraph& g, const NetworkModelSpec& spec, int k_max);

struct RandomNetworkParams {
    int node_count = 2;
    double edge_probability = 0.3;
    double fixed_fraction = 0.0;
    int noise_count = 0;
    std::uint64_t seed = 0;
};

// Seeded, reproducible random network honoring the no-self-loop and
// noise-sources-have-no-in-edges rules. No nodes start excited.
NetworkModelSpec random_network(const RandomNetworkParams& params);

// Networks made of small parametrized blocks glued together by fixed edges,
// either as one long mixed ring or as bridged separate blocks.
NetworkModelSpec bridged_network(std::uint64_t seed);

struct CorpusEntry {
    std::string family; // "mixed", "small" or "bridged"
    RandomNetworkParams params;
};

NetworkModelSpec instantiate(const CorpusEntry& entry);

// Manifest format: one instance per line,
//   family=<name> seed=<u64> nodes=<n> edge_prob=<f> fixed_frac=<f> noise=<k>
// so any failure can be replayed from its line alone.
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::string corpus_line(const CorpusEntry& entry);

} // namespace netid::testkit
