#include "testkit.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "identifiability.hpp"

namespace netid::testkit {

namespace {

struct PathSearch {
    const ExtendedGraph& g;
    std::vector<NodeId> sources;
    std::set<NodeId> targets;
    std::vector<char> used; // 1-based vertex occupancy
    int best = 0;

    // Try to route a path for sources[i..] on the free vertices; every source
    // may also be skipped, since a larger family may not use all of them.
    void extend(std::size_t i, int placed) {
        best = std::max(best, placed);
        if (i >= sources.size()) return;
        if (placed + static_cast<int>(sources.size() - i) <= best) return;

        extend(i + 1, placed); // skip this source
        NodeId start = sources[i];
        if (!used[start]) walk(start, i, placed);
    }

    // Grow a simple path from `v`, counting it as complete at any target.
    void walk(NodeId v, std::size_t i, int placed) {
        used[v] = 1;
        if (targets.count(v)) extend(i + 1, placed + 1);
        for (const Edge& e : g.out_edges[v])
            if (!used[e.to]) walk(e.to, i, placed);
        used[v] = 0;
    }
};

} // namespace

int brute_force_vdp(const ExtendedGraph& g, const std::vector<NodeId>& a,
                    const std::vector<NodeId>& b) {
    if (g.vertex_count() > 10)
        throw PreconditionError("brute_force_vdp limited to 10 vertices");

    PathSearch search{g,
                      {a.begin(), a.end()},
                      {b.begin(), b.end()},
                      std::vector<char>(g.vertex_count() + 1, 0)};
    std::sort(search.sources.begin(), search.sources.end());
    search.sources.erase(std::unique(search.sources.begin(), search.sources.end()),
                         search.sources.end());
    search.extend(0, 0);
    return search.best;
}

std::optional<std::vector<NodeId>> exhaustive_min_allocation(
    const ExtendedGraph& g, const NetworkModelSpec& spec, int k_max) {
    if (g.vertex_count() > 10)
        throw PreconditionError("exhaustive_min_allocation limited to 10 vertices");
    if (k_max > g.vertex_count())
        throw PreconditionError("k_max exceeds the vertex count");

    const std::set<NodeId> already(spec.excited_nodes.begin(), spec.excited_nodes.end());
    std::vector<NodeId> candidates;
    for (NodeId v = 1; v <= spec.node_count; ++v)
        if (!already.count(v)) candidates.push_back(v);

    auto passes = [&](const std::vector<NodeId>& extra) {
        std::vector<NodeId> excited = spec.excited_nodes;
        excited.insert(excited.end(), extra.begin(), extra.end());
        return verify_identifiability(g, excitation_set(g, excited)).overall;
    };

    std::vector<NodeId> chosen;
    // Combinations in lexicographic order so the first hit is the answer.
    std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
        if (left == 0) return passes(chosen);
        for (std::size_t i = from; i + left <= candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            if (pick(i + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 0; k <= std::min<int>(k_max, candidates.size()); ++k) {
        chosen.clear();
        if (pick(0, k)) return chosen;
    }
    return std::nullopt;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
    bool chance(double p) { return uniform() < p; }
    int below(int n) { return static_cast<int>(engine_() % static_cast<unsigned>(n)); }

private:
    std::mt19937_64 engine_;
};

EdgeKind draw_kind(Rng& rng, double fixed_fraction) {
    return rng.chance(fixed_fraction) ? EdgeKind::fixed : EdgeKind::parametrized;
}

} // namespace

NetworkModelSpec random_network(const RandomNetworkParams& params) {
    if (params.node_count < 2) throw PreconditionError("need at least 2 nodes");

    Rng rng(params.seed);
    NetworkModelSpec spec;
    spec.node_count = params.node_count;
    spec.noise_count = params.noise_count;

    for (NodeId i = 1; i <= params.node_count; ++i)
        for (NodeId j = 1; j <= params.node_count; ++j) {
            if (i == j) continue;
            if (rng.chance(params.edge_probability))
                spec.module_edges.push_back({i, j, draw_kind(rng, params.fixed_fraction)});
        }

    for (int e = 1; e <= params.noise_count; ++e) {
        const NodeId source = params.node_count + e;
        bool any = false;
        for (NodeId j = 1; j <= params.node_count; ++j)
            if (rng.chance(params.edge_probability)) {
                spec.noise_edges.push_back({source, j, draw_kind(rng, params.fixed_fraction)});
                any = true;
            }
        if (!any)
            spec.noise_edges.push_back(
                {source, 1 + rng.below(params.node_count), draw_kind(rng, params.fixed_fraction)});
    }
    return spec;
}

NetworkModelSpec bridged_network(std::uint64_t seed) {
    Rng rng(seed);
    NetworkModelSpec spec;

    const int blocks = 2 + rng.below(2);
    std::vector<std::vector<NodeId>> members(blocks);
    NodeId next = 1;
    for (int b = 0; b < blocks; ++b) {
        const int size = 2 + rng.below(3);
        for (int k = 0; k < size; ++k) members[b].push_back(next++);
    }
    spec.node_count = next - 1;

    if (rng.chance(0.4)) {
        // One ring through all nodes; edges inside a block are parametrized,
        // edges crossing into the next block are fixed.
        std::vector<NodeId> ring;
        std::set<NodeId> block_starts;
        for (const auto& block : members) {
            block_starts.insert(block.front());
            ring.insert(ring.end(), block.begin(), block.end());
        }
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const NodeId from = ring[k];
            const NodeId to = ring[(k + 1) % ring.size()];
            const bool crossing = block_starts.count(to) > 0;
            spec.module_edges.push_back(
                {from, to, crossing ? EdgeKind::fixed : EdgeKind::parametrized});
        }
    } else {
        // Parametrized ring per block, fixed bridges between blocks.
        for (const auto& block : members)
            for (std::size_t k = 0; k < block.size(); ++k)
                spec.module_edges.push_back(
                    {block[k], block[(k + 1) % block.size()], EdgeKind::parametrized});
        for (int b = 0; b + 1 < blocks; ++b) {
            const NodeId from = members[b][rng.below(static_cast<int>(members[b].size()))];
            const NodeId to =
                members[b + 1][rng.below(static_cast<int>(members[b + 1].size()))];
            spec.module_edges.push_back({from, to, EdgeKind::fixed});
        }
        if (rng.chance(0.5)) {
            const NodeId from =
                members[blocks - 1][rng.below(static_cast<int>(members[blocks - 1].size()))];
            spec.module_edges.push_back({from, members[0].front(), EdgeKind::fixed});
        }
    }
    return spec;
}

NetworkModelSpec instantiate(const CorpusEntry& entry) {
    if (entry.family == "bridged") return bridged_network(entry.params.seed);
    return random_network(entry.params);
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open corpus manifest: " + path);

    std::vector<CorpusEntry> corpus;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        CorpusEntry entry;
        std::istringstream fields(line);
        std::string field;
        while (fields >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ValidationError("corpus line " + std::to_string(line_no) +
                                      ": bad field '" + field + "'");
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (key == "family")
                entry.family = value;
            else if (key == "seed")
                entry.params.seed = std::stoull(value);
            else if (key == "nodes")
                entry.params.node_count = std::stoi(value);
            else if (key == "edge_prob")
                entry.params.edge_probability = std::stod(value);
            else if (key == "fixed_frac")
                entry.params.fixed_fraction = std::stod(value);
            else if (key == "noise")
                entry.params.noise_count = std::stoi(value);
            else
                throw ValidationError("corpus line " + std::to_string(line_no) +
                                      ": unknown key '" + key + "'");
        }
        if (entry.family.empty())
            throw ValidationError("corpus line " + std::to_string(line_no) +
                                  ": missing family");
        corpus.push_back(entry);
    }
    return corpus;
}

std::string corpus_line(const CorpusEntry& e) {
    std::ostringstream out;
    out << "family=" << e.family << " seed=" << e.params.seed
        << " nodes=" << e.params.node_count << " edge_prob=" << e.params.edge_probability
        << " fixed_frac=" << e.params.fixed_fraction << " noise=" << e.params.noise_count;
    return out.str();
}

} // namespace netid::testkit
