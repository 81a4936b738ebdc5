// mcube: exact M-constants, maximal measures and inverse-distance-matrix
// sums for finite subsets of the Hamming cube, cross-validated over four
// independent exact routes and a floating-point optimizer.
//
// Subcommands: analyze <file>, cube -n <N>, tree <file>,
//              sweep --n-max <N> --m-max <M> --count <C> --seed <S>.
// JSON reports go to stdout, diagnostics to stderr. Exit codes: 0 full
// agreement, 1 usage or input error, 2 mathematical disagreement.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcube/analysis.hpp"
#include "mcube/sweep.hpp"

namespace {

struct OutputFlags {
    bool pretty = false;
    bool compact = false;  // --json; compact is already the default
};

int emit_report(const mcube::AnalysisReport& rep, const OutputFlags& out) {
    const nlohmann::ordered_json j = rep.to_json();
    if (out.pretty && !out.compact)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
    if (!rep.consistent()) {
        std::cerr << "mcube: mathematical disagreement detected (see report)\n";
        return 2;
    }
    return 0;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mcube::InvalidArgumentError("cannot open '" + path + "'");
    return in;
}

int run_sweep_command(const mcube::SweepOptions& opt) {
    const mcube::SweepReport rep = mcube::run_sweep(opt);
    for (const std::string& f : rep.failures) std::cout << "violation " << f << "\n";
    std::cout << "sweep n_max=" << opt.n_max << " m_max=" << opt.m_max << " count=" << opt.count
              << " seed=" << opt.seed << ": instances=" << rep.instances
              << " checks=" << rep.checks << " passed=" << rep.passed
              << " failed=" << rep.failed << "\n";
    return rep.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact M-constants and distance-matrix identities on Hamming-cube subsets"};
    app.require_subcommand(1);

    OutputFlags out;
    mcube::AnalysisOptions options;
    bool no_oracle = false;
    std::size_t cap = mcube::kDefaultCubeCap;

    app.add_flag("--pretty", out.pretty, "indent the JSON report");
    app.add_flag("--json", out.compact, "single-line JSON (default)");
    app.add_flag("--no-oracle", no_oracle, "skip the floating-point cross-check");
    app.add_option("--cap", cap, "cube dimension cap for enumeration");

    std::string points_path;
    auto* cmd_analyze = app.add_subcommand("analyze", "analyze a point-set file");
    cmd_analyze->add_option("file", points_path, "point-set file")->required();
    cmd_analyze->fallthrough();

    std::size_t cube_n = 0;
    auto* cmd_cube = app.add_subcommand("cube", "analyze the full cube H_n");
    cmd_cube->add_option("-n,--dimension", cube_n, "cube dimension")->required();
    cmd_cube->fallthrough();

    std::string tree_path;
    auto* cmd_tree = app.add_subcommand("tree", "embed a tree and check its identities");
    cmd_tree->add_option("file", tree_path, "tree file")->required();
    cmd_tree->fallthrough();

    mcube::SweepOptions sweep_opt;
    auto* cmd_sweep = app.add_subcommand("sweep", "randomized verification sweep");
    cmd_sweep->add_option("--n-max", sweep_opt.n_max, "max cube dimension");
    cmd_sweep->add_option("--m-max", sweep_opt.m_max, "max subset size");
    cmd_sweep->add_option("--count", sweep_opt.count, "instances per (n, m) cell");
    cmd_sweep->add_option("--seed", sweep_opt.seed, "sweep seed");
    cmd_sweep->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    options.with_oracle = !no_oracle;
    sweep_opt.with_oracle = !no_oracle;

    try {
        if (cmd_analyze->parsed()) {
            std::ifstream in = open_input(points_path);
            const mcube::HammingPointSet x = mcube::parse_point_set(in);
            return emit_report(mcube::analyze(x, options), out);
        }
        if (cmd_cube->parsed()) {
            const mcube::HammingPointSet x = mcube::full_cube(cube_n, cap);
            return emit_report(mcube::analyze(x, options), out);
        }
        if (cmd_tree->parsed()) {
            std::ifstream in = open_input(tree_path);
            const mcube::UnweightedTree t = mcube::parse_tree(in);
            return emit_report(mcube::analyze_tree(t, options), out);
        }
        if (cmd_sweep->parsed()) return run_sweep_command(sweep_opt);
    } catch (const mcube::ParseError& e) {
        std::cerr << "mcube: " << e.what() << "\n";
        return 1;
    } catch (const mcube::NotATreeError& e) {
        std::cerr << "mcube: " << e.what() << "\n";
        return 1;
    } catch (const mcube::InvalidArgumentError& e) {
        std::cerr << "mcube: " << e.what() << "\n";
        return 1;
    } catch (const mcube::Error& e) {
        std::cerr << "mcube: internal disagreement: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
