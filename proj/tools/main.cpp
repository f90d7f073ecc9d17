#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leipnik/errors.hpp"
#include "leipnik/scan.hpp"
#include "leipnik/scenario.hpp"

using namespace leipnik;

namespace {

// exit codes: 0 ok, 1 validation failed, 2 bad config/usage, 3 numerical trouble

template <typename Result>
int emit_csv(const Result& result, const std::string& out_path) {
    if (out_path.empty()) {
        result.write_csv(std::cout);
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "config error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    result.write_csv(f);
    f.flush();
    if (!f) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return 3;
    }
    return 0;
}

int emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "config error: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy of gaussian packets under time-dependent quadratic "
                 "hamiltonians"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int jobs = 1;
    int quad_nodes = 512;
    int figure_index = 0;

    const auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("-c,--config", config_path, "scenario JSON file")
                ->required()
                ->check(CLI::ExistingFile);
        cmd->add_option("-o,--out", out_path, "output file (default: stdout)");
        cmd->add_option("-j,--jobs", jobs, "worker threads for the scan grid")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--quad-nodes", quad_nodes,
                        "trapezoid nodes for the phase-average cross-check")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* scan = app.add_subcommand(
        "scan", "sweep (r, theta, t) and write spreads and entropies as CSV");
    add_common(scan, true);
    CLI::App* validate = app.add_subcommand(
        "validate", "cross-check closed forms, quadratures and invariants");
    add_common(validate, true);
    CLI::App* tstar = app.add_subcommand(
        "tstar", "locate the free-particle entropy minimum per (r, theta)");
    add_common(tstar, true);
    CLI::App* figure = app.add_subcommand(
        "figure", "run a canned scan (1: S(0) surface, 2: monotone growth, "
                  "3: dip to the floor, 4: oscillator period)");
    figure->add_option("index", figure_index, "figure number")
        ->required()
        ->check(CLI::Range(1, 4));
    add_common(figure, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunOptions opts;
        opts.jobs = jobs;
        opts.quad_nodes = quad_nodes;
        const Scenario sc = figure->parsed()
                                ? figure_preset(figure_index)
                                : Scenario::from_file(config_path);
        if (scan->parsed() || figure->parsed())
            return emit_csv(run_scan(sc, opts), out_path);
        if (tstar->parsed()) return emit_csv(run_tstar(sc, opts), out_path);
        const ValidationReport rep = run_validate(sc, opts);
        const int rc = emit_text(rep.text(), out_path);
        if (rc != 0) return rc;
        return rep.passed() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownIdentifier& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UnboundParameter& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const OverdampedUnsupported& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
