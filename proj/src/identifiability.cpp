#include "identifiability.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include <Eigen/Dense>

namespace netid {

ExcitationSet excitation_set(const ExtendedGraph& g,
                             const std::vector<NodeId>& excited_w_nodes) {
    std::set<NodeId> u(excited_w_nodes.begin(), excited_w_nodes.end());
    for (NodeId v = g.w_count + 1; v <= g.vertex_count(); ++v) u.insert(v);
    return ExcitationSet{{u.begin(), u.end()}};
}

ExcitationSet excitation_set(const NetworkModelSpec& spec) {
    return excitation_set(build_extended_graph(spec), spec.excited_nodes);
}

namespace {

// Plain BFS max flow on a unit-capacity network, small enough here that
// anything fancier would be noise.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count) : head_(node_count) {}

    void add_arc(int from, int to) {
        arcs_.push_back({to, 1});
        head_[from].push_back(static_cast<int>(arcs_.size()) - 1);
        arcs_.push_back({from, 0});
        head_[to].push_back(static_cast<int>(arcs_.size()) - 1);
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (augment(s, t)) ++total;
        return total;
    }

private:
    struct Arc {
        int to;
        int capacity;
    };

    bool augment(int s, int t) {
        std::vector<int> via(head_.size(), -1);
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int idx : head_[v]) {
                const Arc& a = arcs_[idx];
                if (a.capacity == 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                via[a.to] = idx;
                q.push(a.to);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int idx = via[v];
            arcs_[idx].capacity -= 1;
            arcs_[idx ^ 1].capacity += 1;
            v = arcs_[idx ^ 1].to;
        }
        return true;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> head_;
};

} // namespace

int max_vertex_disjoint_paths(const ExtendedGraph& g, const std::vector<NodeId>& a,
                              const std::vector<NodeId>& b) {
    if (a.empty() || b.empty()) return 0;

    // Vertex v splits into entry node 2v and exit node 2v+1 joined by a unit
    // arc, so each vertex carries at most one path, endpoints included.
    const int n = g.vertex_count();
    const int source = 2 * (n + 1);
    const int sink = source + 1;
    FlowNetwork net(sink + 1);

    for (NodeId v = 1; v <= n; ++v) net.add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges) net.add_arc(2 * e.from + 1, 2 * e.to);

    std::set<NodeId> sources(a.begin(), a.end());
    std::set<NodeId> targets(b.begin(), b.end());
    for (NodeId v : sources) net.add_arc(source, 2 * v);
    for (NodeId v : targets) net.add_arc(2 * v + 1, sink);

    return net.max_flow(source, sink);
}

Certificate verify_identifiability(const ExtendedGraph& g, const ExcitationSet& u) {
    Certificate cert;
    cert.overall = true;
    for (NodeId j = 1; j <= g.w_count; ++j) {
        NodeCondition c;
        c.node = j;
        std::vector<NodeId> pj = parametrized_in_set(g, j);
        c.required = static_cast<int>(pj.size());
        c.achieved = pj.empty() ? 0 : max_vertex_disjoint_paths(g, u.nodes, pj);
        c.pass = c.achieved == c.required;
        cert.overall = cert.overall && c.pass;
        cert.nodes.push_back(c);
    }
    return cert;
}

namespace {

double random_weight(std::mt19937_64& rng) {
    // Magnitude in [0.5, 1.5] with random sign; keeps draws away from zero.
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    const double magnitude = 0.5 + u;
    return (rng() & 1) ? magnitude : -magnitude;
}

} // namespace

int generic_rank_oracle(const ExtendedGraph& g, const std::vector<NodeId>& a,
                        const std::vector<NodeId>& b, int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("generic rank oracle needs trials >= 1");
    if (a.empty() || b.empty()) return 0;

    const int n = g.vertex_count();
    const int rows = n + static_cast<int>(b.size());
    const int cols = n + static_cast<int>(a.size());
    std::mt19937_64 rng(seed);
    constexpr int max_redraws = 64;

    int best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Eigen::MatrixXd m;
        bool ok = false;
        for (int attempt = 0; attempt < max_redraws && !ok; ++attempt) {
            m = Eigen::MatrixXd::Identity(n, n);
            for (const Edge& e : g.edges)
                m(e.to - 1, e.from - 1) = -random_weight(rng);
            ok = Eigen::FullPivLU<Eigen::MatrixXd>(m).isInvertible();
        }
        if (!ok) throw NumericError("could not draw an invertible instance");

        // Rank of the B-rows/A-columns block of inverse(m), evaluated without
        // forming the inverse: bordering m with the selector columns of A and
        // rows of B gives a matrix whose rank exceeds n by exactly that block
        // rank, and its entries stay at unit scale so the relative singular
        // value cutoff is meaningful even for structurally zero blocks.
        Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(rows, cols);
        bordered.topLeftCorner(n, n) = m;
        for (std::size_t c = 0; c < a.size(); ++c)
            bordered(a[c] - 1, n + static_cast<int>(c)) = 1.0;
        for (std::size_t r = 0; r < b.size(); ++r)
            bordered(n + static_cast<int>(r), b[r] - 1) = 1.0;

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(bordered);
        const auto& sv = svd.singularValues();
        const double cutoff = sv(0) * std::max(rows, cols) *
                              std::numeric_limits<double>::epsilon();
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) ++rank;
        best = std::max(best, rank - n);
    }
    return best;
}

} // namespace netid
