#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamiltonica/checks.hpp"
#include "hamiltonica/constructions.hpp"
#include "hamiltonica/factors.hpp"
#include "hamiltonica/ham.hpp"
#include "hamiltonica/io.hpp"
#include "hamiltonica/toughness.hpp"

namespace fs = std::filesystem;
using namespace hamiltonica;
using nlohmann::ordered_json;

namespace {

void emit_graph(const Graph& g, const std::string& format, const std::string& out) {
    std::string text;
    if (format == "graph6")
        text = to_graph6(g) + "\n";
    else if (format == "json")
        text = to_json(g).dump(2) + "\n";
    else if (format == "dot")
        text = to_dot(g);
    else
        throw CLI::ValidationError("--format", "unknown format " + format);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << text;
    }
}

void write_report(const CheckReport& r, const std::string& out_dir, int seq) {
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    char name[64];
    snprintf(name, sizeof name, "%03d-%s.json", seq, r.check_id.c_str());
    std::ofstream f(fs::path(out_dir) / name);
    f << r.to_json().dump(2) << "\n";
}

int report_exit(const CheckReport& r) {
    switch (r.verdict) {
        case CheckReport::Verdict::Pass: return 0;
        case CheckReport::Verdict::Fail: return 1;
        case CheckReport::Verdict::Skipped: return 2;
    }
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hamiltonicity toolkit for tree products"};
    app.require_subcommand(1);

    std::string format = "graph6", out, out_dir;

    // ---- gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "construct graphs");
    gen->require_subcommand(1);
    gen->fallthrough();
    gen->add_option("--format", format, "graph6|json|dot")->capture_default_str();
    gen->add_option("-o,--out", out, "output file (default stdout)");

    int delta = 3, n_arg = 0, k_arg = 0;
    std::string left_file, right_file;
    auto* g_tdelta = gen->add_subcommand("tdelta", "the counterexample tree family");
    g_tdelta->add_option("--delta", delta, "maximum degree")->required();
    auto* g_product = gen->add_subcommand("product", "cartesian product of two graph files");
    g_product->add_option("--left", left_file)->required();
    g_product->add_option("--right", right_file)->required();
    auto* g_path = gen->add_subcommand("path", "path graph P_n");
    g_path->add_option("n", n_arg)->required();
    auto* g_cycle = gen->add_subcommand("cycle", "cycle graph C_n");
    g_cycle->add_option("n", n_arg)->required();
    auto* g_star = gen->add_subcommand("star", "star K_{1,k}");
    g_star->add_option("k", k_arg)->required();
    for (auto* sc : gen->get_subcommands({})) sc->fallthrough();

    // ---- solve -----------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "hamiltonian cycle decision with certificate");
    std::string solve_file;
    long long budget = 1'000'000'000;
    bool no_prune = false;
    solve->add_option("file", solve_file, "graph file (graph6 or json)")->required();
    solve->add_option("--budget", budget, "search node budget")->capture_default_str();
    solve->add_flag("--no-prune", no_prune, "disable all solver pruning");
    solve->add_option("--out", out_dir, "directory for the certificate bundle");

    // ---- check -----------------------------------------------------------
    auto* check = app.add_subcommand("check", "run one named verification check");
    check->require_subcommand(1);
    check->add_option("--out", out_dir, "directory for the report");
    check->add_option("--budget", budget, "search node budget")->capture_default_str();

    int c_n = 5, c_k = 3, c_max = 5, c_delta = 3, c_m = 5, c_tree_n = 5;
    std::vector<int> c_ms{2, 3, 4, 5}, c_ns{3, 4};
    std::string tree_file;
    auto* ck_tail = check->add_subcommand("strip-cover-tail");
    ck_tail->add_option("--n", c_n)->required();
    ck_tail->add_option("--k", c_k)->required();
    auto* ck_parity = check->add_subcommand("strip-cover-parity");
    ck_parity->add_option("--n", c_n)->required();
    auto* ck_nofactor = check->add_subcommand("no-factor-product");
    ck_nofactor->add_option("--max-n", c_max)->capture_default_str();
    auto* ck_family = check->add_subcommand("tree-family-nonham");
    ck_family->add_option("--delta", c_delta)->capture_default_str();
    ck_family->add_option("--m", c_ms, "m values")->capture_default_str();
    ck_family->add_option("--tree", tree_file, "override the tree under test");
    auto* ck_comp = check->add_subcommand("component-counts");
    ck_comp->add_option("--delta", c_delta)->capture_default_str();
    ck_comp->add_option("--m", c_m)->capture_default_str();
    auto* ck_pos = check->add_subcommand("positive-side");
    ck_pos->add_option("--tree", tree_file, "tree graph file")->required();
    ck_pos->add_option("--n", c_n)->required();
    auto* ck_tc = check->add_subcommand("tree-times-cycle");
    ck_tc->add_option("--max-tree-n", c_tree_n)->capture_default_str();
    ck_tc->add_option("--n", c_ns, "cycle lengths")->capture_default_str();
    for (auto* sc : check->get_subcommands({})) sc->fallthrough();

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the whole verification harness");
    std::string profile = "quick";
    int threads = 0;
    verify->add_option("--profile", profile, "quick|full")->capture_default_str();
    verify->add_option("--out", out_dir, "directory for the report bundle");
    verify->add_option("--threads", threads, "workers (0: HAMILTONICA_THREADS)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            Graph g;
            if (g_tdelta->parsed()) g = build_t_delta(delta);
            else if (g_product->parsed())
                g = cartesian_product(read_graph_file(left_file),
                                      read_graph_file(right_file));
            else if (g_path->parsed()) g = path_graph(n_arg);
            else if (g_cycle->parsed()) g = cycle_graph(n_arg);
            else g = star(k_arg);
            emit_graph(g, format, out);
            return 0;
        }

        if (solve->parsed()) {
            Graph g = read_graph_file(solve_file);
            SolverOptions opts;
            opts.node_budget = budget;
            if (no_prune) {
                opts.propagate = opts.connectivity = false;
                opts.articulation = opts.bipartite_precheck = false;
            }
            HamVerdict v = find_hamiltonian_cycle(g, opts);
            ordered_json j;
            j["vertices"] = g.vertex_count();
            j["edges"] = g.edge_count();
            j["nodes_explored"] = v.stats.nodes_explored;
            int code;
            switch (v.outcome) {
                case HamVerdict::Outcome::Found:
                    j["verdict"] = "Found";
                    j["cycle"] = v.cycle;
                    j["certified"] = verify_cycle(g, v.cycle);
                    code = 0;
                    break;
                case HamVerdict::Outcome::NotHamiltonian:
                    j["verdict"] = "NotHamiltonian";
                    code = 1;
                    break;
                default:
                    j["verdict"] = "Unknown";
                    j["budget"] = v.budget;
                    code = 2;
            }
            std::cout << j.dump(2) << "\n";
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                std::ofstream f(fs::path(out_dir) / "certificate.json");
                f << j.dump(2) << "\n";
            }
            return code;
        }

        if (check->parsed()) {
            CheckReport r;
            if (ck_tail->parsed()) r = check_strip_cover_tail(c_n, c_k);
            else if (ck_parity->parsed()) r = check_strip_cover_parity(c_n);
            else if (ck_nofactor->parsed())
                r = check_no_factor_product(
                    c_max, {path_graph(2), path_graph(3), star(3)}, budget);
            else if (ck_family->parsed()) {
                if (tree_file.empty()) {
                    r = check_tree_family_nonham(c_delta, c_ms, budget);
                } else {
                    Graph t = read_graph_file(tree_file);
                    r = check_tree_family_nonham(c_delta, c_ms, budget, false, &t);
                }
            } else if (ck_comp->parsed())
                r = check_component_counts(c_delta, c_m);
            else if (ck_pos->parsed())
                r = check_positive_side(read_graph_file(tree_file), c_n, budget);
            else
                r = check_tree_times_cycle(c_tree_n, c_ns, budget);
            std::cout << r.to_json().dump(2) << "\n";
            write_report(r, out_dir, 0);
            return report_exit(r);
        }

        // verify
        Profile p;
        if (profile == "quick") p = Profile::Quick;
        else if (profile == "full") p = Profile::Full;
        else throw CLI::ValidationError("--profile", "expected quick or full");
        auto reports = run_all(p, threads);
        std::cout << summary_table(reports);
        for (size_t i = 0; i < reports.size(); ++i)
            write_report(reports[i], out_dir, (int)i + 1);
        return summary_exit_code(reports);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
