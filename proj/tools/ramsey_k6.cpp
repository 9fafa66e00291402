// Command-line front end: catalog enumeration, single-graph verification,
// separation tables, structural-vs-oracle crosschecks, generator report.
#include <atomic>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/blowup.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/lemma_lab.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/solvers.hpp"

namespace {

using namespace ramsey;

int cmd_enumerate(int n, const std::string& out_dir, int jobs) {
    auto entries = enumerate_catalog(n, jobs);
    auto classes = enumerate_structures(jobs);
    auto report = generators_report(classes);
    if (!out_dir.empty()) write_catalog(entries, report, out_dir);
    int t1 = 0, t2 = 0;
    for (const auto& e : entries) (e.kind == StructureKind::Type1 ? t1 : t2) += 1;
    std::cout << entries.size() << " classes (" << t1 << " Type1, " << t2 << " Type2)\n";
    if (n < 15) std::cout << "note: n < 15 is below the theorem range; entries are flagged\n";
    if (!out_dir.empty())
        std::cout << "wrote " << out_dir << "/catalog.json and " << entries.size()
                  << " .g6 files\n";
    return 0;
}

int cmd_verify(const std::string& path, int n) {
    Graph g = read_graph_file(path);
    auto fail = [](const std::string& why) {
        std::cout << "NOT-CRITICAL (" << why << ")\n";
        return 1;
    };
    if (g.vertex_count() != 5 * (n - 1))
        return fail("order " + std::to_string(g.vertex_count()) + " != 5(n-1) = " +
                    std::to_string(5 * (n - 1)));
    DecoratedQuotient dq;
    try {
        dq = recover_structure(g, n);
    } catch (const structure_error& e) {
        return fail(e.what());
    }
    if (!is_cn_free_structural(dq, n))
        return fail("contains C_" + std::to_string(n) + " (structural)");
    if (g.vertex_count() <= 35) {
        if (auto w = has_cycle_of_length(g, n)) {
            std::string cyc;
            for (int v : w->vertices) cyc += std::to_string(v) + " ";
            return fail("contains C_" + std::to_string(n) + ": " + cyc);
        }
    } else {
        std::cout << "note: oracle cycle check disabled above 35 vertices; "
                     "structural check applies\n";
    }
    int alpha = independence_number(g).alpha;
    if (alpha > 5) return fail("independence number " + std::to_string(alpha) + " > 5");
    if (!min_degree_check(g, n, 5))
        return fail("minimum degree below 5(n-1) - r(C_n,K_5)");
    std::cout << "CRITICAL\n";
    return 0;
}

int cmd_tables(const std::string& which, const std::string& format) {
    std::vector<std::pair<std::string, TableId>> wanted;
    if (which.empty() || which == "1") wanted.emplace_back("1", TableId::Table1);
    if (which.empty() || which == "2") wanted.emplace_back("2", TableId::Table2);
    if (which.empty() || which == "case16") wanted.emplace_back("case16", TableId::Case16);
    if (wanted.empty()) {
        std::cerr << "unknown table: " << which << " (use 1, 2 or case16)\n";
        return 2;
    }
    if (format == "json") {
        nlohmann::json j;
        for (auto& [name, id] : wanted) {
            auto& rows = j[name];
            rows = nlohmann::json::array();
            for (const auto& row : reproduce_table(id))
                rows.push_back({{"anchors", row.anchors},
                                {"allowed", std::vector<int>(row.allowed.begin(),
                                                             row.allowed.end())}});
        }
        std::cout << j.dump(1) << '\n';
    } else {
        for (auto& [name, id] : wanted) std::cout << render_table(id) << '\n';
    }
    return 0;
}

int cmd_crosscheck(int n, int jobs) {
    std::atomic<long long> candidates{0};
    std::atomic<long long> disagreements{0};
    // large masks land first so the thread pool stays busy at the tail
    parallel_for(1024, jobs, [&](long long task) {
        int mask = 1023 - static_cast<int>(task);
        long long local = 0;
        for_each_candidate_of_mask(mask, [&](const DecoratedQuotient& dq) {
            ++local;
            bool structural_free = is_cn_free_structural(dq, n);
            Graph g = build_blowup(dq, n);
            bool oracle_free = !has_cycle_of_length(g, n).has_value();
            if (structural_free != oracle_free) {
                disagreements.fetch_add(1);
                std::cerr << "DISAGREEMENT at n=" << n << ": " << decorated_to_text(dq)
                          << " structural_free=" << structural_free
                          << " oracle_free=" << oracle_free << '\n';
            }
        });
        candidates += local;
    });
    std::cout << candidates.load() << " candidates, " << disagreements.load()
              << " disagreements\n";
    return disagreements.load() == 0 ? 0 : 1;
}

int cmd_generators(int jobs) {
    auto classes = enumerate_structures(jobs);
    auto report = generators_report(classes);
    for (const auto& [id, derived] : report.derived) {
        std::cout << id << " ->";
        if (derived.empty())
            std::cout << " (none)";
        else
            for (const auto& s : derived) std::cout << ' ' << s;
        std::cout << '\n';
    }
    std::cout << report.generating << " generating, " << report.non_generating
              << " non-generating\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalog of C_n-free order-5(n-1) graphs with independence number 5"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 0;
    unsigned long seed = 20240915ul;
    app.add_option("--jobs", jobs, "worker threads (default: hardware, env RAMSEY_JOBS)");
    app.add_option("--seed", seed, "seed for randomized checks (reserved)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the catalog at n");
    int n_enum = 15;
    std::string out_dir;
    enumerate_cmd->add_option("--n", n_enum, "cycle parameter (>= 6)")->check(CLI::Range(6, 100));
    enumerate_cmd->add_option("--out", out_dir, "output directory for catalog.json + .g6 files");

    auto* verify_cmd = app.add_subcommand("verify", "verify one graph file");
    std::string graph_path;
    int n_verify = 15;
    verify_cmd->add_option("--graph", graph_path, "graph6 or edge-list file")->required();
    verify_cmd->add_option("--n", n_verify, "cycle parameter")->check(CLI::Range(6, 100));

    auto* tables_cmd = app.add_subcommand("tables", "print the separation tables");
    std::string which, format = "text";
    tables_cmd->add_option("--which", which, "1, 2 or case16 (default: all)");
    tables_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* crosscheck_cmd =
        app.add_subcommand("crosscheck", "structural vs oracle over all candidates");
    int n_cross = 6;
    crosscheck_cmd->add_option("--n", n_cross, "cycle parameter (6..8)")->check(CLI::Range(6, 8));

    app.add_subcommand("generators", "Type1 -> Type2 generation report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("enumerate")) return cmd_enumerate(n_enum, out_dir, jobs);
        if (app.got_subcommand("verify")) return cmd_verify(graph_path, n_verify);
        if (app.got_subcommand("tables")) return cmd_tables(which, format);
        if (app.got_subcommand("crosscheck")) return cmd_crosscheck(n_cross, jobs);
        if (app.got_subcommand("generators")) return cmd_generators(jobs);
    } catch (const ramsey::structure_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const ramsey::graph_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
