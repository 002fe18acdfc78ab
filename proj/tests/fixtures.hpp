#pragma once

#include "graph.hpp"

namespace netid::fixtures {

// Three-node ring with one known module: 1->2 and 2->3 parametrized,
// 3->1 fixed. Small enough to check every value by hand.
inline NetworkModelSpec triangle() {
    NetworkModelSpec spec;
    spec.node_count = 3;
    spec.module_edges = {
        {1, 2, EdgeKind::parametrized},
        {2, 3, EdgeKind::parametrized},
        {3, 1, EdgeKind::fixed},
    };
    return spec;
}

// Five-node ring 5->1->4->2->3->5 whose segments 5->1, 4->2, 2->3 are
// parametrized while 1->4 and 3->5 are known, plus two known shortcut
// modules 2->1 and 4->5. Dropping the fixed edges leaves two separate
// parametrized pieces (rooted at 5 and at 4), while the whole ring is a
// valid single unit under the parametrized-indegree rule.
inline NetworkModelSpec ring5() {
    NetworkModelSpec spec;
    spec.node_count = 5;
    spec.module_edges = {
        {5, 1, EdgeKind::parametrized},
        {1, 4, EdgeKind::fixed},
        {4, 2, EdgeKind::parametrized},
        {2, 3, EdgeKind::parametrized},
        {3, 5, EdgeKind::fixed},
        {2, 1, EdgeKind::fixed},
        {4, 5, EdgeKind::fixed},
    };
    return spec;
}

// Eight nodes, two halves. Left half: parametrized 2-cycle {1,6} feeding 3
// and 4, with known modules 1->2 and 2->3. Right half: parametrized 2-cycle
// {7,8} feeding 5 and 4 through known modules. Designed so the SIMUG
// covering has exactly two units rooted at {1,6} and {7,8}, while treating
// every module as parametrized forces four pseudotrees.
inline NetworkModelSpec twin_cycles8() {
    NetworkModelSpec spec;
    spec.node_count = 8;
    spec.module_edges = {
        {1, 6, EdgeKind::parametrized},
        {6, 1, EdgeKind::parametrized},
        {6, 3, EdgeKind::parametrized},
        {1, 2, EdgeKind::fixed},
        {2, 3, EdgeKind::fixed},
        {3, 4, EdgeKind::parametrized},
        {7, 8, EdgeKind::parametrized},
        {8, 7, EdgeKind::parametrized},
        {8, 5, EdgeKind::fixed},
        {5, 4, EdgeKind::fixed},
        {8, 4, EdgeKind::fixed},
    };
    return spec;
}

} // namespace netid::fixtures
