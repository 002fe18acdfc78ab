// Command-line front end. Everything goes through the public C API in
// netid.h; this file only adds document parsing, report formatting and DOT
// rendering on top.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netid.h"
#include "spec_document.hpp"

namespace {

using netid_cli::DocEdge;
using netid_cli::DocumentError;
using netid_cli::SpecDocument;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_condition_not_met = 2;
constexpr int exit_internal = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

int exit_code_for(netid_status status) {
    switch (status) {
    case NETID_OK:
        return exit_ok;
    case NETID_ERR_INVALID_ARGUMENT:
    case NETID_ERR_VALIDATION:
        return exit_input_error;
    default:
        return exit_internal;
    }
}

void check(netid_status status) {
    if (status != NETID_OK) die(exit_code_for(status), netid_last_error());
}

using SpecHandle = std::unique_ptr<netid_spec, decltype(&netid_spec_destroy)>;

SpecHandle build_spec(const SpecDocument& doc) {
    netid_spec* raw = nullptr;
    check(netid_spec_create(doc.node_count, doc.noise_count, &raw));
    SpecHandle spec(raw, &netid_spec_destroy);
    for (const DocEdge& e : doc.edges)
        check(netid_spec_add_edge(spec.get(), e.from, e.to,
                                  e.fixed ? NETID_EDGE_FIXED : NETID_EDGE_PARAMETRIZED));
    for (const DocEdge& e : doc.noise_edges)
        check(netid_spec_add_noise_edge(
            spec.get(), e.from, e.to,
            e.fixed ? NETID_EDGE_FIXED : NETID_EDGE_PARAMETRIZED));
    for (int v : doc.excited) check(netid_spec_add_excited(spec.get(), v));
    check(netid_spec_validate(spec.get()));
    return spec;
}

SpecDocument load_or_die(const std::string& path) {
    try {
        return netid_cli::load_document(path);
    } catch (const DocumentError& e) {
        die(exit_input_error, path + ": " + e.message);
    }
}

// Comma-separated node list; empty string or "none" clears the set.
std::vector<int> parse_excited_override(const std::string& csv, const SpecDocument& doc) {
    std::vector<int> nodes;
    if (csv.empty() || csv == "none") return nodes;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        bool numeric = !item.empty();
        for (char c : item) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
        if (numeric) {
            const int v = std::stoi(item);
            if (v < 1 || v > doc.node_count)
                die(exit_input_error, "--excited: node " + item + " out of range");
            nodes.push_back(v);
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < doc.names.size(); ++i)
            if (doc.names[i] == item) {
                nodes.push_back(static_cast<int>(i) + 1);
                found = true;
            }
        if (!found) die(exit_input_error, "--excited: unknown node '" + item + "'");
    }
    return nodes;
}

netid_method method_from_name(const std::string& name) {
    if (name == "simug") return NETID_METHOD_SIMUG;
    if (name == "pseudotree-param") return NETID_METHOD_PSEUDOTREE_PARAMETRIZED;
    if (name == "pseudotree-all") return NETID_METHOD_PSEUDOTREE_ALL;
    die(exit_input_error, "unknown baseline '" + name + "'");
}

// ---- report pieces -------------------------------------------------------

nlohmann::ordered_json certificate_json(const netid_certificate* cert,
                                        const SpecDocument& doc) {
    nlohmann::ordered_json j;
    j["overall"] = netid_certificate_overall(cert) != 0;
    j["nodes"] = nlohmann::ordered_json::array();
    for (int i = 0; i < netid_certificate_size(cert); ++i) {
        int node = 0, required = 0, achieved = 0, pass = 0;
        check(netid_certificate_entry(cert, i, &node, &required, &achieved, &pass));
        j["nodes"].push_back({{"node", doc.node_name(node)},
                              {"required", required},
                              {"achieved", achieved},
                              {"pass", pass != 0}});
    }
    return j;
}

void print_certificate_text(const netid_certificate* cert, const SpecDocument& doc,
                            std::ostream& out) {
    out << "node      required  achieved  status\n";
    for (int i = 0; i < netid_certificate_size(cert); ++i) {
        int node = 0, required = 0, achieved = 0, pass = 0;
        check(netid_certificate_entry(cert, i, &node, &required, &achieved, &pass));
        char line[128];
        std::snprintf(line, sizeof(line), "%-9s %8d  %8d  %s\n",
                      doc.node_name(node).c_str(), required, achieved,
                      pass ? "ok" : "FAIL");
        out << line;
    }
    out << "overall: "
        << (netid_certificate_overall(cert) ? "condition met" : "condition NOT met")
        << "\n";
}

nlohmann::ordered_json covering_json(const netid_covering* cov, const SpecDocument& doc) {
    nlohmann::ordered_json units = nlohmann::ordered_json::array();
    for (int u = 0; u < netid_covering_size(cov); ++u) {
        nlohmann::ordered_json unit;
        unit["roots"] = nlohmann::ordered_json::array();
        for (int r = 0; r < netid_covering_root_count(cov, u); ++r) {
            int v = 0;
            check(netid_covering_root(cov, u, r, &v));
            unit["roots"].push_back(doc.node_name(v));
        }
        unit["vertices"] = nlohmann::ordered_json::array();
        for (int k = 0; k < netid_covering_vertex_count(cov, u); ++k) {
            int v = 0;
            check(netid_covering_vertex(cov, u, k, &v));
            unit["vertices"].push_back(doc.node_name(v));
        }
        unit["edges"] = nlohmann::ordered_json::array();
        for (int k = 0; k < netid_covering_edge_count(cov, u); ++k) {
            int from = 0, to = 0;
            netid_edge_kind kind = NETID_EDGE_PARAMETRIZED;
            check(netid_covering_edge(cov, u, k, &from, &to, &kind));
            unit["edges"].push_back(
                {{"from", doc.node_name(from)},
                 {"to", doc.node_name(to)},
                 {"kind", kind == NETID_EDGE_FIXED ? "fixed" : "parametrized"}});
        }
        units.push_back(unit);
    }
    return units;
}

void print_covering_text(const netid_covering* cov, const SpecDocument& doc,
                         std::ostream& out) {
    out << "covering with " << netid_covering_size(cov) << " unit(s)\n";
    for (int u = 0; u < netid_covering_size(cov); ++u) {
        out << "  unit " << u + 1 << ": roots {";
        for (int r = 0; r < netid_covering_root_count(cov, u); ++r) {
            int v = 0;
            check(netid_covering_root(cov, u, r, &v));
            out << (r ? ", " : "") << doc.node_name(v);
        }
        out << "}, edges";
        for (int k = 0; k < netid_covering_edge_count(cov, u); ++k) {
            int from = 0, to = 0;
            netid_edge_kind kind = NETID_EDGE_PARAMETRIZED;
            check(netid_covering_edge(cov, u, k, &from, &to, &kind));
            out << " " << doc.node_name(from)
                << (kind == NETID_EDGE_FIXED ? "=>" : "->") << doc.node_name(to);
        }
        out << "\n";
    }
}

nlohmann::ordered_json plan_json(const netid_plan* plan, const SpecDocument& doc,
                                 const std::string& method, bool pruned) {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["pruned"] = pruned;
    j["new_signals"] = nlohmann::ordered_json::array();
    for (int i = 0; i < netid_plan_new_signal_count(plan); ++i) {
        int v = 0;
        check(netid_plan_new_signal(plan, i, &v));
        j["new_signals"].push_back(doc.node_name(v));
    }
    j["reused"] = nlohmann::ordered_json::array();
    for (int i = 0; i < netid_plan_reused_count(plan); ++i) {
        int unit = 0, node = 0;
        check(netid_plan_reused(plan, i, &unit, &node));
        j["reused"].push_back({{"unit", unit + 1}, {"node", doc.node_name(node)}});
    }
    j["skipped_units"] = nlohmann::ordered_json::array();
    for (int i = 0; i < netid_plan_skipped_count(plan); ++i) {
        int unit = 0;
        check(netid_plan_skipped(plan, i, &unit));
        j["skipped_units"].push_back(unit + 1);
    }
    j["fallback_used"] = netid_plan_fallback_used(plan) != 0;
    j["covering"] = covering_json(netid_plan_covering(plan), doc);
    j["certificate"] = certificate_json(netid_plan_certificate(plan), doc);
    return j;
}

void print_plan_text(const netid_plan* plan, const SpecDocument& doc,
                     const std::string& method, bool pruned, std::ostream& out) {
    out << "method: " << method << (pruned ? " (pruned)" : "") << "\n";
    out << "new signals:";
    if (netid_plan_new_signal_count(plan) == 0) out << " none";
    for (int i = 0; i < netid_plan_new_signal_count(plan); ++i) {
        int v = 0;
        check(netid_plan_new_signal(plan, i, &v));
        out << " " << doc.node_name(v);
    }
    out << "\n";
    for (int i = 0; i < netid_plan_reused_count(plan); ++i) {
        int unit = 0, node = 0;
        check(netid_plan_reused(plan, i, &unit, &node));
        out << "unit " << unit + 1 << " reuses existing signal at "
            << doc.node_name(node) << "\n";
    }
    for (int i = 0; i < netid_plan_skipped_count(plan); ++i) {
        int unit = 0;
        check(netid_plan_skipped(plan, i, &unit));
        out << "unit " << unit + 1 << " has only fixed modules, no signal needed\n";
    }
    print_covering_text(netid_plan_covering(plan), doc, out);
    print_certificate_text(netid_plan_certificate(plan), doc, out);
}

// Stable DOT rendering: one color class per unit, dashed fixed modules,
// doubled border on excited nodes, gray for uncovered edges.
std::string render_dot(const SpecDocument& doc, const netid_covering* cov) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999"};
    constexpr int palette_size = 8;

    std::ostringstream out;
    out << "digraph network {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::vector<char> excited(doc.node_count + 1, 0);
    for (int v : doc.excited) excited[v] = 1;
    for (int v = 1; v <= doc.node_count; ++v) {
        out << "  \"" << doc.node_name(v) << "\"";
        if (excited[v]) out << " [peripheries=2]";
        out << ";\n";
    }
    for (int e = 1; e <= doc.noise_count; ++e)
        out << "  \"e" << e << "\" [shape=box];\n";

    std::vector<std::pair<DocEdge, int>> placed; // edge, unit index (-1 uncovered)
    for (int u = 0; u < netid_covering_size(cov); ++u)
        for (int k = 0; k < netid_covering_edge_count(cov, u); ++k) {
            int from = 0, to = 0;
            netid_edge_kind kind = NETID_EDGE_PARAMETRIZED;
            check(netid_covering_edge(cov, u, k, &from, &to, &kind));
            placed.push_back({{from, to, kind == NETID_EDGE_FIXED}, u});
        }
    auto covered = [&](int from, int to) {
        for (const auto& [edge, unit] : placed)
            if (edge.from == from && edge.to == to) return true;
        return false;
    };
    for (const DocEdge& e : doc.edges)
        if (!covered(e.from, e.to)) placed.push_back({e, -1});
    for (const DocEdge& e : doc.noise_edges)
        if (!covered(doc.node_count + e.from, e.to))
            placed.push_back({{doc.node_count + e.from, e.to, e.fixed}, -1});

    for (const auto& [edge, unit] : placed) {
        out << "  \"" << doc.node_name(edge.from) << "\" -> \""
            << doc.node_name(edge.to) << "\" [color=\""
            << (unit < 0 ? "#bbbbbb" : palette[unit % palette_size]) << "\"";
        if (edge.fixed) out << " style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

// ---- commands -------------------------------------------------------------

struct CommonOptions {
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 12345;
};

int run_verify(const CommonOptions& opts, const std::optional<std::string>& excited_csv,
               bool cross_check) {
    const SpecDocument doc = load_or_die(opts.input);
    const SpecHandle spec = build_spec(doc);

    std::vector<int> override_nodes;
    const int* override_ptr = nullptr;
    int override_len = -1;
    if (excited_csv) {
        override_nodes = parse_excited_override(*excited_csv, doc);
        override_ptr = override_nodes.data();
        override_len = static_cast<int>(override_nodes.size());
    }

    netid_certificate* cert = nullptr;
    check(netid_verify(spec.get(), override_ptr, override_len, &cert));
    std::unique_ptr<netid_certificate, decltype(&netid_certificate_destroy)> guard(
        cert, &netid_certificate_destroy);

    if (opts.format == "structured") {
        nlohmann::ordered_json j = certificate_json(cert, doc);
        if (cross_check) {
            // Per-node comparison against the randomized numeric rank.
            nlohmann::ordered_json agreement = nlohmann::ordered_json::array();
            std::vector<int> u = excited_csv ? override_nodes : doc.excited;
            for (int e = 1; e <= doc.noise_count; ++e) u.push_back(doc.node_count + e);
            for (int i = 0; i < netid_certificate_size(cert); ++i) {
                int node = 0, required = 0, achieved = 0, pass = 0;
                check(netid_certificate_entry(cert, i, &node, &required, &achieved, &pass));
                if (required == 0) continue;
                // Targets are the parametrized feeders; recover them from the
                // document rather than extending the C surface.
                std::vector<int> targets;
                for (const DocEdge& edge : doc.edges)
                    if (edge.to == node && !edge.fixed) targets.push_back(edge.from);
                for (const DocEdge& edge : doc.noise_edges)
                    if (edge.to == node && !edge.fixed)
                        targets.push_back(doc.node_count + edge.from);
                int rank = 0;
                check(netid_generic_rank(spec.get(), u.data(),
                                         static_cast<int>(u.size()), targets.data(),
                                         static_cast<int>(targets.size()), 10,
                                         opts.seed + static_cast<std::uint64_t>(node),
                                         &rank));
                agreement.push_back({{"node", doc.node_name(node)},
                                     {"path_count", achieved},
                                     {"numeric_rank", rank},
                                     {"agree", rank == achieved}});
            }
            j["cross_check"] = agreement;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        print_certificate_text(cert, doc, std::cout);
        if (cross_check) {
            std::vector<int> u = excited_csv ? override_nodes : doc.excited;
            for (int e = 1; e <= doc.noise_count; ++e) u.push_back(doc.node_count + e);
            for (int i = 0; i < netid_certificate_size(cert); ++i) {
                int node = 0, required = 0, achieved = 0, pass = 0;
                check(netid_certificate_entry(cert, i, &node, &required, &achieved, &pass));
                if (required == 0) continue;
                std::vector<int> targets;
                for (const DocEdge& edge : doc.edges)
                    if (edge.to == node && !edge.fixed) targets.push_back(edge.from);
                for (const DocEdge& edge : doc.noise_edges)
                    if (edge.to == node && !edge.fixed)
                        targets.push_back(doc.node_count + edge.from);
                int rank = 0;
                check(netid_generic_rank(spec.get(), u.data(),
                                         static_cast<int>(u.size()), targets.data(),
                                         static_cast<int>(targets.size()), 10,
                                         opts.seed + static_cast<std::uint64_t>(node),
                                         &rank));
                std::cout << "cross-check " << doc.node_name(node) << ": paths "
                          << achieved << ", numeric rank " << rank
                          << (rank == achieved ? " (agree)" : " (DISAGREE)") << "\n";
            }
        }
    }
    return netid_certificate_overall(cert) ? exit_ok : exit_condition_not_met;
}

int run_cover(const CommonOptions& opts, const std::string& baseline) {
    const SpecDocument doc = load_or_die(opts.input);
    const SpecHandle spec = build_spec(doc);

    netid_covering* cov = nullptr;
    check(netid_cover(spec.get(), method_from_name(baseline), &cov));
    std::unique_ptr<netid_covering, decltype(&netid_covering_destroy)> guard(
        cov, &netid_covering_destroy);

    if (opts.format == "structured") {
        nlohmann::ordered_json j;
        j["method"] = baseline;
        j["units"] = covering_json(cov, doc);
        std::cout << j.dump(2) << "\n";
    } else {
        print_covering_text(cov, doc, std::cout);
    }
    return exit_ok;
}

int run_allocate(const CommonOptions& opts, const std::string& baseline, bool no_prune) {
    const SpecDocument doc = load_or_die(opts.input);
    const SpecHandle spec = build_spec(doc);

    const netid_method method = method_from_name(baseline);
    const bool prune = method == NETID_METHOD_SIMUG && !no_prune;
    netid_plan* plan = nullptr;
    check(netid_allocate(spec.get(), method, prune ? 1 : 0, &plan));
    std::unique_ptr<netid_plan, decltype(&netid_plan_destroy)> guard(plan,
                                                                     &netid_plan_destroy);

    if (opts.format == "structured")
        std::cout << plan_json(plan, doc, baseline, prune).dump(2) << "\n";
    else
        print_plan_text(plan, doc, baseline, prune, std::cout);
    return netid_certificate_overall(netid_plan_certificate(plan))
               ? exit_ok
               : exit_condition_not_met;
}

int run_compare(const CommonOptions& opts) {
    const SpecDocument doc = load_or_die(opts.input);
    const SpecHandle spec = build_spec(doc);

    struct Entry {
        const char* name;
        netid_method method;
        int prune;
    };
    const Entry entries[] = {
        {"simug", NETID_METHOD_SIMUG, 1},
        {"pseudotree-param", NETID_METHOD_PSEUDOTREE_PARAMETRIZED, 0},
        {"pseudotree-all", NETID_METHOD_PSEUDOTREE_ALL, 0},
    };

    nlohmann::ordered_json j;
    for (const Entry& entry : entries) {
        netid_plan* plan = nullptr;
        check(netid_allocate(spec.get(), entry.method, entry.prune, &plan));
        std::unique_ptr<netid_plan, decltype(&netid_plan_destroy)> guard(
            plan, &netid_plan_destroy);
        if (opts.format == "structured") {
            j[entry.name] = plan_json(plan, doc, entry.name, entry.prune != 0);
        } else {
            std::cout << "=== " << entry.name << " ===\n";
            print_plan_text(plan, doc, entry.name, entry.prune != 0, std::cout);
            std::cout << "\n";
        }
    }
    if (opts.format == "structured") std::cout << j.dump(2) << "\n";
    return exit_ok;
}

int run_export_dot(const CommonOptions& opts, const std::string& baseline,
                   const std::string& output) {
    const SpecDocument doc = load_or_die(opts.input);
    const SpecHandle spec = build_spec(doc);

    netid_covering* cov = nullptr;
    check(netid_cover(spec.get(), method_from_name(baseline), &cov));
    std::unique_ptr<netid_covering, decltype(&netid_covering_destroy)> guard(
        cov, &netid_covering_destroy);

    const std::string dot = render_dot(doc, cov);
    if (output.empty() || output == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(output);
        if (!out) die(exit_input_error, "cannot write '" + output + "'");
        out << dot;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"excitation signal placement for dynamic network model sets"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string baseline = "simug";
    std::optional<std::string> excited_csv;
    bool cross_check = false;
    bool no_prune = false;
    std::string dot_output;

    auto add_common = [&](CLI::App* cmd, bool with_baseline) {
        cmd->add_option("input", opts.input, "network document (json)")->required();
        cmd->add_option("--format", opts.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--seed", opts.seed, "seed for randomized checks");
        if (with_baseline)
            cmd->add_option("--baseline", baseline, "covering method")
                ->check(CLI::IsMember({"simug", "pseudotree-param", "pseudotree-all"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "check the path condition");
    add_common(verify, false);
    verify->add_option("--excited", excited_csv,
                       "override the excited set (comma separated, '' for none)");
    verify->add_flag("--cross-check", cross_check,
                     "also compare against the randomized numeric rank");

    CLI::App* cover = app.add_subcommand("cover", "compute a covering");
    add_common(cover, true);

    CLI::App* allocate = app.add_subcommand("allocate", "place excitation signals");
    add_common(allocate, true);
    allocate->add_flag("--no-prune", no_prune, "keep redundant fresh signals");

    CLI::App* compare = app.add_subcommand("compare", "all methods side by side");
    add_common(compare, false);

    CLI::App* export_dot = app.add_subcommand("export-dot", "render covering as DOT");
    add_common(export_dot, true);
    export_dot->add_option("-o,--output", dot_output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(opts, excited_csv, cross_check);
        if (app.got_subcommand(cover)) return run_cover(opts, baseline);
        if (app.got_subcommand(allocate)) return run_allocate(opts, baseline, no_prune);
        if (app.got_subcommand(compare)) return run_compare(opts);
        if (app.got_subcommand(export_dot))
            return run_export_dot(opts, baseline, dot_output);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input_error;
}
