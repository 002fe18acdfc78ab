#pragma once

#include <optional>
#include <vector>

#include "covering.hpp"
#include "graph.hpp"
#include "identifiability.hpp"

namespace netid {

enum class CoverMethod { simug, pseudotree_parametrized, pseudotree_all };

// Some root of t that is already externally driven: a member of the spec's
// excited nodes or a noise source. Lowest qualifying root, absent if none.
std::optional<NodeId> existing_excitation(const Simug& t, const NetworkModelSpec& spec);

struct ReusedExcitation {
    int simug_index = 0;
    NodeId node = 0;
};

struct AllocationPlan {
    CoverMethod method = CoverMethod::simug;
    std::vector<NodeId> new_signals;       // w-nodes receiving fresh r-signals
    std::vector<ReusedExcitation> reused;  // covering units driven by existing signals
    std::vector<int> skipped;              // fixed-only units needing no excitation
    Covering covering;
    Certificate certificate;
    bool fallback_used = false;
    bool pruned = false;
};

// Covers the extended graph, skips fixed-only units, reuses existing r/e
// signals on roots, and places a fresh signal at the lowest root of every
// remaining unit. The result is always checked with the path verifier; if the
// check fails, every unit (including skipped ones) gets an excited root and
// the check runs again. A failure after that throws InternalError.
AllocationPlan allocate(const NetworkModelSpec& spec);

// Same pipeline with a pseudotree covering instead. These reproduce the
// prior allocation schemes: no units are skipped and no pruning is applied.
AllocationPlan allocate_with_method(const NetworkModelSpec& spec, CoverMethod method);

// Drops fresh signals one by one (ascending node order) whenever the
// verifier still passes without them. Afterwards no single remaining fresh
// signal can be removed. Requires a passing plan.
AllocationPlan prune(AllocationPlan plan, const ExtendedGraph& g,
                     const NetworkModelSpec& spec);

struct ComparisonReport {
    AllocationPlan simug;                  // allocate + prune
    AllocationPlan pseudotree_parametrized;
    AllocationPlan pseudotree_all;
};

// Side-by-side allocation counts for the SIMUG method and both pseudotree
// baselines, each with its own certificate.
ComparisonReport compare_with_baseline(const NetworkModelSpec& spec);

} // namespace netid
