#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qcorr/bounds.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Raised by the matrix-file parser; carries the offending line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// Plain-text state format: first line the subsystem dimensions, then the
/// row-major matrix entries as `re,im` pairs separated by whitespace.
DensityMatrix load_state_file(const std::string& path);
void save_state_file(const DensityMatrix& rho, const std::string& path);

/// Parse an observable name: x/y/z, sx/sy/sz, sigma1/sigma2/sigma3, 1/2/3.
Observable parse_observable(const std::string& name);

struct SweepSpec {
    Family family = Family::WernerGhz;
    int grid = 201;
    std::map<std::string, double> fixed; // e.g. phi for GW
    Observable obs_x = Observable::pauli_x();
    Observable obs_z = Observable::pauli_z();
    std::uint64_t seed = 0;
    std::string output;
    int jobs = 0; // 0 = hardware concurrency
};

/// One evaluated grid point of a sweep.
struct SweepRow {
    double param = 0.0;
    BoundReport report;
};

inline constexpr const char* kSweepCsvHeader =
    "param,D_AB,D_AC,discord_sum,bound_new,bound_hufan,delta1,delta2,s_a,"
    "lhs_uncertainty,q_mu,applicable_monogamy";

/// Evaluate the sweep grid (rows in grid order, deterministic for a fixed spec).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Serialize rows as CSV (12 significant digits, LF line endings).
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// run_sweep + write to spec.output.
void cmd_sweep(const SweepSpec& spec);

enum class Theorem { Eq6, T1_15, T1_16, T2, T3, Eq19, HuFan };

std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& name);

struct CheckSpec {
    Theorem theorem = Theorem::T2;
    int trials = 200;
    std::uint64_t seed = 0;
    Family source = Family::RandomGinibre;
    std::map<std::string, double> params; // for fixed-family sources
    int parts = 0;                        // 0 = theorem default (3, or 4 for T3/EQ19)
    int jobs = 0;
};

struct CheckResult {
    Theorem theorem;
    int trials = 0;
    double tolerance = 0.0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    std::uint64_t worst_seed = 0;
    int violations = 0; // trials with slack < -tolerance
};

/// Run the randomized inequality check; deterministic for fixed spec.
CheckResult run_check(const CheckSpec& spec);

/// Human-readable check summary (byte-stable for fixed spec).
void write_check_report(const CheckResult& r, const CheckSpec& spec, std::ostream& out);

struct ReportSpec {
    // exactly one of state_file / family point is used
    std::string state_file;
    bool from_file = false;
    StateFamilyPoint point;
    std::vector<Observable> observables; // 2 for tripartite, N for (N+1)-partite
};

/// Full bound listing for one state (tripartite BoundReport or multipartite
/// report with both b' readings when N = 3).
void run_report(const ReportSpec& spec, std::ostream& out);

/// Emit a self-contained gnuplot script (data embedded) drawing discord_sum,
/// bound_new and bound_hufan against the sweep parameter.
/// Returns false when the CSV had a valid header but no data rows.
bool write_plotscript(const std::string& csv_path, std::ostream& out);

} // namespace qcorr
