// Command-line front end: bounds reports, labeling verification,
// constructions, exhaustive search, tau scans, table re-validation, and
// DOT export.
//
// Exit codes: 0 success / antimagic, 1 not antimagic or no labeling,
// 2 search budget exceeded, 3 usage or file error.

#include "antimagic/constructors.hpp"
#include "antimagic/io.hpp"
#include "antimagic/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace antimagic;
using nlohmann::json;

namespace {

EdgeLabeling read_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_labeling(in);
}

void emit_labeling(const EdgeLabeling& L, const std::string& out_path,
                   const std::string& comment) {
    if (out_path.empty()) {
        write_labeling(std::cout, L, comment);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        write_labeling(out, L, comment);
    }
}

json labeling_json(const EdgeLabeling& L) {
    json edges = json::array();
    for (int i = 0; i < L.graph.edge_count(); ++i)
        edges.push_back({{"u", L.graph.edges[i].first},
                         {"v", L.graph.edges[i].second},
                         {"label", L.labels[i]}});
    return {{"vertex_count", L.graph.vertex_count}, {"edges", edges}};
}

int run_bounds(const std::string& spec, bool as_json) {
    const Graph g = parse_graphspec(spec);
    const auto r = beta_report(g);
    if (as_json) {
        json j{{"n", r.n},
               {"m", r.m},
               {"internal_edges", r.k},
               {"p3_components", r.t_prime},
               {"bound_first", to_string(r.bound_first)},
               {"bound_first_floor", r.bound_first_floor},
               {"bound_second", r.bound_second},
               {"beta", r.beta},
               {"hypotheses_hold", r.valid}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n:                 " << r.n << "\n"
              << "m:                 " << r.m << "\n"
              << "internal_edges:    " << r.k << "\n"
              << "p3_components:     " << r.t_prime << "\n"
              << "bound_first:       " << to_string(r.bound_first) << "\n"
              << "bound_first_floor: " << r.bound_first_floor << "\n"
              << "bound_second:      " << r.bound_second << "\n"
              << "beta: " << r.beta << "\n";
    if (!r.valid)
        std::cout << "note:              graph has an isolated vertex or P2 component;\n"
                  << "                   the bound does not apply\n";
    return 0;
}

int run_verify(const std::string& path, bool as_json) {
    const auto L = read_labeling_file(path);
    const auto r = verify_antimagic(L);
    const auto sp = split_p3_components(L.graph);
    const auto two_largest = check_two_largest_hypothesis(L);
    const auto thresh = check_threshold_hypothesis_masked(L, sp.host_edge, sp.host_vertex,
                                                          sp.host_n, sp.host_m, sp.t);
    if (as_json) {
        json dups = json::array();
        for (const auto& [u, v, phi] : r.duplicate_pairs)
            dups.push_back({{"u", u}, {"v", v}, {"phi", phi}});
        json j{{"antimagic", r.antimagic},
               {"max_phi", r.max_phi},
               {"duplicate_pairs", dups},
               {"two_largest_vertices", two_largest},
               {"threshold_vertices", json::array()}};
        for (const auto& q : thresh) j["threshold_vertices"].push_back(q.vertex);
        std::cout << j.dump(2) << "\n";
        return r.antimagic ? 0 : 1;
    }
    std::cout << "antimagic: " << (r.antimagic ? "yes" : "no") << "\n"
              << "max_phi:   " << r.max_phi << "\n";
    for (const auto& [u, v, phi] : r.duplicate_pairs)
        std::cout << "duplicate: vertices " << u << " and " << v << " share phi " << phi << "\n";
    std::cout << "two_largest_extension:";
    if (two_largest.empty()) std::cout << " no qualifying vertex";
    for (int v : two_largest) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "threshold_extension (host n=" << sp.host_n << " m=" << sp.host_m
              << " t=" << sp.t << "):";
    if (thresh.empty()) std::cout << " no qualifying vertex";
    for (const auto& q : thresh) std::cout << " " << q.vertex;
    std::cout << "\n";
    return r.antimagic ? 0 : 1;
}

int run_search(const std::string& spec, long long budget, int threads, bool as_json) {
    const Graph g = parse_graphspec(spec);
    const auto out = search_antimagic(g, budget, threads);
    const char* status = out.status == SearchStatus::Found          ? "Found"
                         : out.status == SearchStatus::NotAntimagic ? "NotAntimagic"
                                                                    : "BudgetExceeded";
    if (as_json) {
        json j{{"status", status}, {"nodes_explored", out.nodes_explored}};
        if (out.labeling) j["labeling"] = labeling_json(*out.labeling);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << status << "\n"
                  << "nodes:  " << out.nodes_explored << "\n";
        if (out.labeling) write_labeling(std::cout, *out.labeling);
    }
    switch (out.status) {
        case SearchStatus::Found: return 0;
        case SearchStatus::NotAntimagic: return 1;
        default: return 2;
    }
}

int run_tau(const std::string& spec, int t_max, long long budget, bool as_json) {
    const Graph g = parse_graphspec(spec);
    const auto r = tau_exact(g, t_max, budget);
    std::string kind;
    std::string tau;
    switch (r.kind) {
        case TauResult::Kind::Exact:
            kind = "exact";
            tau = std::to_string(r.tau);
            break;
        case TauResult::Kind::MinusInfinity:
            kind = "exact";
            tau = "-inf";
            break;
        case TauResult::Kind::LowerBound:
            kind = "lower_bound";
            tau = std::to_string(r.tau);
            break;
    }
    if (as_json) {
        json j{{"kind", kind}, {"tau", tau}};
        j["scanned_t"] = r.per_t.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kind: " << kind << "\n"
                  << "tau:  " << tau << "\n"
                  << "scanned_t: " << r.per_t.size() << "\n";
    }
    return 0;
}

int run_tables_verify(bool as_json) {
    int bad = 0;
    json report = json::array();
    for (const auto& row : table_rows()) {
        const auto L = labeling_from_row(row);
        bool ok = verify_antimagic(L).antimagic;
        if (row.table_id != 1 && row.threshold_column != threshold(row.host_n, row.host_n, row.t))
            ok = false;
        const int mprime = L.graph.edge_count();
        const auto [lo, hi] = row.underlined;
        const bool top_two = lo == mprime - 1 && hi == mprime;
        if (top_two && check_two_largest_hypothesis(L).empty()) ok = false;
        if (row.table_id == 2 || (row.table_id == 3 && !top_two)) {
            bool matched = false;
            for (const auto& q : check_threshold_hypothesis(L, row.host_n, row.host_n, row.t)) {
                const int a = L.labels[q.edge_a], b = L.labels[q.edge_b];
                if (std::min(a, b) == lo && std::max(a, b) == hi) matched = true;
            }
            if (!matched) ok = false;
        }
        if (!ok) ++bad;
        if (as_json) {
            report.push_back({{"table", row.table_id},
                              {"host_n", row.host_n},
                              {"t", row.t},
                              {"ok", ok}});
        } else {
            std::cout << "table " << row.table_id << " n=" << row.host_n << " t=" << row.t
                      << ": " << (ok ? "ok" : "FAILED") << "\n";
        }
    }
    if (as_json) std::cout << report.dump(2) << "\n";
    else std::cout << (bad == 0 ? "all rows ok" : "some rows FAILED") << "\n";
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antimagic labelings of G union tP3: bounds, constructions, search"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output");

    std::string spec, file, out_path;
    long long budget = std::numeric_limits<long long>::max();
    int threads = 1, t_max = 10, n = 3, t = 0, r = 11;

    auto* bounds = app.add_subcommand("bounds", "print the beta bound report for a graph");
    bounds->add_option("graphspec", spec)->required();

    auto* verify = app.add_subcommand("verify", "check a labeling file for antimagicness");
    verify->add_option("file", file)->required();

    auto* construct = app.add_subcommand("construct", "build an antimagic labeling");
    construct->require_subcommand(1);
    auto* cj = construct->add_subcommand("jellyfish-c3", "J(C3,r) union tP3, r >= 11");
    cj->add_option("--r", r)->required();
    cj->add_option("--t", t)->required();
    cj->add_option("--out", out_path);
    auto* cc = construct->add_subcommand("cycle", "C_n union tP3, t <= min(22, beta)");
    cc->add_option("--n", n)->required();
    cc->add_option("--t", t)->required();
    cc->add_option("--out", out_path);
    auto* cu = construct->add_subcommand("union-c3", "C_n union C3 union tP3, t <= 15");
    cu->add_option("--n", n)->required();
    cu->add_option("--t", t)->required();
    cu->add_option("--out", out_path);

    auto* search = app.add_subcommand("search", "backtracking search for a labeling");
    search->add_option("graphspec", spec)->required();
    search->add_option("--budget", budget);
    search->add_option("--threads", threads)->check(CLI::Range(1, 256));

    auto* tau = app.add_subcommand("tau", "scan t upward while search succeeds");
    tau->add_option("graphspec", spec)->required();
    tau->add_option("--t-max", t_max);
    tau->add_option("--budget", budget);

    app.add_subcommand("tables-verify", "re-validate the embedded labeling tables");

    auto* dot = app.add_subcommand("export-dot", "labeling file to DOT with phi annotations");
    dot->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;  // usage error
    }

    try {
        if (bounds->parsed()) return run_bounds(spec, as_json);
        if (verify->parsed()) return run_verify(file, as_json);
        if (construct->parsed()) {
            EdgeLabeling L;
            std::string comment;
            if (cj->parsed()) {
                L = build_jellyfish_c3_labeling(r, t);
                comment = "jellyfish-c3 r=" + std::to_string(r) + " t=" + std::to_string(t);
            } else if (cc->parsed()) {
                L = construct_cycle(n, t);
                comment = "cycle n=" + std::to_string(n) + " t=" + std::to_string(t);
            } else {
                L = construct_union_cycle_c3(n, t);
                comment = "union-c3 n=" + std::to_string(n) + " t=" + std::to_string(t);
            }
            if (as_json) std::cout << labeling_json(L).dump(2) << "\n";
            else emit_labeling(L, out_path, comment);
            if (as_json && !out_path.empty()) emit_labeling(L, out_path, comment);
            return 0;
        }
        if (search->parsed()) return run_search(spec, budget, threads, as_json);
        if (tau->parsed()) return run_tau(spec, t_max, budget, as_json);
        if (app.get_subcommand("tables-verify")->parsed()) return run_tables_verify(as_json);
        if (dot->parsed()) {
            const auto L = read_labeling_file(file);
            write_dot(std::cout, L);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
