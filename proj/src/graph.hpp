#pragma once

#include <compare>
#include <string>
#include <vector>

#include "errors.hpp"

namespace netid {

// Vertices are 1-based. Indices 1..L are internal (w) nodes, indices
// L+1..L+p are noise source (e) nodes. Classification is purely positional.
using NodeId = int;

enum class EdgeKind { parametrized, fixed };

struct Edge {
    NodeId from = 0;
    NodeId to = 0;
    EdgeKind kind = EdgeKind::parametrized;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// User-facing description of a network model set: how many internal nodes
// and noise sources there are, which directed modules exist and whether each
// is parametrized or known (fixed), plus the nodes that already receive an
// external excitation signal.
struct NetworkModelSpec {
    int node_count = 0;  // L
    int noise_count = 0; // p
    std::vector<Edge> module_edges; // endpoints in 1..L
    std::vector<Edge> noise_edges;  // from in L+1..L+p, to in 1..L
    std::vector<NodeId> excited_nodes;

    int vertex_count() const { return node_count + noise_count; }
};

// Directed graph over w-nodes and e-nodes with the edge set split into
// parametrized and fixed parts. Adjacency matrices use the (head, tail)
// convention: column i lists the out-neighbors of vertex i.
struct ExtendedGraph {
    int w_count = 0; // L
    int e_count = 0; // p
    std::vector<Edge> edges; // sorted by (from, to)

    // (vertex_count+1)^2, row 0 / column 0 unused so vertex ids index directly
    std::vector<std::vector<int>> a_p;
    std::vector<std::vector<int>> a_f;

    std::vector<std::vector<Edge>> out_edges; // indexed by tail
    std::vector<std::vector<Edge>> in_edges;  // indexed by head

    int vertex_count() const { return w_count + e_count; }
    bool is_w_node(NodeId v) const { return v >= 1 && v <= w_count; }
    bool is_e_node(NodeId v) const { return v > w_count && v <= vertex_count(); }

    std::vector<Edge> parametrized_edges() const;
    std::vector<Edge> fixed_edges() const;
};

// A multi-rooted subgraph together with its root set. `roots` is always the
// exact set of vertices from which every vertex of the subgraph is reachable
// using only `edges`.
struct Simug {
    std::vector<NodeId> vertices; // sorted
    std::vector<Edge> edges;      // sorted
    std::vector<NodeId> roots;    // sorted, recomputed from structure

    bool contains_vertex(NodeId v) const;
    bool fixed_only() const;
};

std::string edge_to_string(const Edge& e);

// Checks all structural invariants and throws ValidationError naming the
// offending element.
void validate_spec(const NetworkModelSpec& spec);

ExtendedGraph build_extended_graph(const NetworkModelSpec& spec);

// P_j: tails of parametrized edges entering w-node j. Throws for e-nodes.
std::vector<NodeId> parametrized_in_set(const ExtendedGraph& g, NodeId j);

// All vertices from which every vertex in `vertices` is reachable via
// `edges`. Empty result means the subgraph is not multi-rooted.
std::vector<NodeId> compute_roots(const std::vector<NodeId>& vertices,
                                  const std::vector<Edge>& edges);

// True when the subgraph has >= 2 vertices, a nonempty root set, and no
// vertex with more than one incoming parametrized edge inside `edges`.
bool is_simug(const std::vector<NodeId>& vertices, const std::vector<Edge>& edges);

// Same shape of check but with every edge counting toward the per-node
// indegree bound; this is the pseudotree notion.
bool is_pseudotree(const std::vector<NodeId>& vertices, const std::vector<Edge>& edges);

// Builds a Simug from an edge list: vertices are the edge endpoints, roots
// are recomputed.
Simug make_simug(std::vector<Edge> edges);

// Both conditions of edge-disjointness: no shared edges, and every vertex's
// outgoing edges within the union belong to exactly one of the two subgraphs.
bool edge_disjoint(const Simug& t1, const Simug& t2);

} // namespace netid
