// qcorr: quantum discord, entropic uncertainty bounds and discord-shareability
// sweeps for small multi-qubit states.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/cli.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitViolation = 3;

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs)
{
    std::map<std::string, double> out;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw qcorr::precondition_error("--param expects key=value, got '" + kv + "'");
        }
        std::istringstream vs(kv.substr(eq + 1));
        double v;
        if (!(vs >> v) || !(vs >> std::ws).eof()) {
            throw qcorr::precondition_error("--param value in '" + kv + "' is not a number");
        }
        out[kv.substr(0, eq)] = v;
    }
    return out;
}

std::vector<qcorr::Observable> parse_obs_list(const std::string& spec)
{
    std::vector<qcorr::Observable> out;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(qcorr::parse_observable(tok));
    }
    if (out.empty()) {
        throw qcorr::precondition_error("--obs expects a comma-separated observable list");
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"quantum discord shareability and uncertainty-bound calculator"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate a state family over a parameter grid, write CSV");
    std::string sw_family, sw_obs = "x,z", sw_output;
    int sw_grid = 201, sw_jobs = 0;
    std::uint64_t sw_seed = 0;
    std::vector<std::string> sw_params;
    sweep->add_option("--family", sw_family, "state family tag")->required();
    sweep->add_option("--grid", sw_grid, "number of grid points (default 201)");
    sweep->add_option("--param", sw_params, "fixed parameter key=value (repeatable)");
    sweep->add_option("--obs", sw_obs, "observable pair, e.g. x,z (default)");
    sweep->add_option("--seed", sw_seed, "random seed (random families only)");
    sweep->add_option("-o,--output", sw_output, "output CSV path")->required();
    sweep->add_option("--jobs", sw_jobs, "worker threads (default: all cores)");

    // check
    auto* check = app.add_subcommand("check", "randomized verification of an inequality");
    std::string ch_theorem, ch_source = "RANDOM_GINIBRE";
    int ch_trials = 200, ch_parts = 0, ch_jobs = 0;
    std::uint64_t ch_seed = 0;
    std::vector<std::string> ch_params;
    check->add_option("--theorem", ch_theorem, "EQ6, T1_15, T1_16, T2, T3, EQ19 or HUFAN")->required();
    check->add_option("--trials", ch_trials, "number of states to test (default 200)");
    check->add_option("--seed", ch_seed, "base seed; trial t uses seed+t");
    check->add_option("--parts", ch_parts, "subsystem count (default 3; 4 for T3/EQ19)");
    check->add_option("--source", ch_source, "state source family (default RANDOM_GINIBRE)");
    check->add_option("--param", ch_params, "fixed-family parameter key=value (repeatable)");
    check->add_option("--jobs", ch_jobs, "worker threads (default: all cores)");

    // report
    auto* report = app.add_subcommand("report", "full bound listing for one state");
    std::string rp_state, rp_family, rp_obs;
    int rp_parts = 3;
    std::uint64_t rp_seed = 0;
    std::vector<std::string> rp_params;
    auto* rp_state_opt = report->add_option("--state", rp_state, "matrix file path");
    auto* rp_family_opt = report->add_option("--family", rp_family, "state family tag");
    rp_state_opt->excludes(rp_family_opt);
    report->add_option("--param", rp_params, "family parameter key=value (repeatable)");
    report->add_option("--obs", rp_obs, "observables, e.g. x,z or x,y,z");
    report->add_option("--parts", rp_parts, "subsystem count for random families (default 3)");
    report->add_option("--seed", rp_seed, "seed for random families");

    // plotscript
    auto* plot = app.add_subcommand("plotscript", "emit a gnuplot script from a sweep CSV");
    std::string pl_csv, pl_output;
    plot->add_option("csv", pl_csv, "sweep CSV path")->required();
    plot->add_option("-o,--output", pl_output, "output script path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            qcorr::SweepSpec spec;
            spec.family = qcorr::parse_family(sw_family);
            spec.grid = sw_grid;
            spec.fixed = parse_params(sw_params);
            const auto obs = parse_obs_list(sw_obs);
            if (obs.size() != 2) {
                throw qcorr::precondition_error("sweep: --obs needs exactly two observables");
            }
            spec.obs_x = obs[0];
            spec.obs_z = obs[1];
            spec.seed = sw_seed;
            spec.output = sw_output;
            spec.jobs = sw_jobs;
            qcorr::cmd_sweep(spec);
            return kExitOk;
        }
        if (check->parsed()) {
            qcorr::CheckSpec spec;
            spec.theorem = qcorr::parse_theorem(ch_theorem);
            spec.trials = ch_trials;
            spec.seed = ch_seed;
            spec.source = qcorr::parse_family(ch_source);
            spec.params = parse_params(ch_params);
            spec.parts = ch_parts;
            spec.jobs = ch_jobs;
            const qcorr::CheckResult result = qcorr::run_check(spec);
            qcorr::write_check_report(result, spec, std::cout);
            return result.violations == 0 ? kExitOk : kExitViolation;
        }
        if (report->parsed()) {
            qcorr::ReportSpec spec;
            if (!rp_state.empty()) {
                spec.from_file = true;
                spec.state_file = rp_state;
            } else if (!rp_family.empty()) {
                spec.point.family = qcorr::parse_family(rp_family);
                spec.point.params = parse_params(rp_params);
                spec.point.seed = rp_seed;
                spec.point.dims = std::vector<int>(rp_parts, 2);
            } else {
                throw qcorr::precondition_error("report: one of --state or --family is required");
            }
            if (!rp_obs.empty()) spec.observables = parse_obs_list(rp_obs);
            qcorr::run_report(spec, std::cout);
            return kExitOk;
        }
        if (plot->parsed()) {
            std::ostringstream script;
            const bool had_rows = qcorr::write_plotscript(pl_csv, script);
            std::ofstream out(pl_output, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot open output file '" + pl_output + "'");
            }
            out << script.str();
            if (!had_rows) {
                std::cerr << "warning: '" << pl_csv << "' has no data rows; script draws empty axes\n";
            }
            return kExitOk;
        }
    } catch (const qcorr::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qcorr::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qcorr::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
