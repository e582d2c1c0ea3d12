#include "qcorr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "qcorr/entropy.hpp"

namespace qcorr {

namespace {

std::string g12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

int worker_count(int jobs)
{
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(i) for i in [0, count) on a small worker pool; rethrows the first
// failure. Each index is independent, so scheduling cannot affect results.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn)
{
    const int workers = std::min(worker_count(jobs), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void check_fixed_params(const SweepSpec& spec)
{
    for (const auto& [key, value] : spec.fixed) {
        if (spec.family == Family::GW && key == "phi") {
            if (!(value >= 0.0 && value < 2.0 * std::numbers::pi)) {
                throw precondition_error("sweep: phi outside [0, 2pi)");
            }
            continue;
        }
        throw precondition_error("sweep: unknown fixed parameter '" + key + "' for family " +
                                 family_name(spec.family));
    }
}

} // namespace

DensityMatrix load_state_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open state file '" + path + "'", 0);
    }
    std::string line;
    int lineno = 0;

    std::vector<int> dims;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        int d;
        while (ls >> d) dims.push_back(d);
        if (!ls.eof()) {
            throw parse_error("expected whitespace-separated subsystem dimensions", lineno);
        }
        break;
    }
    if (dims.empty()) {
        throw parse_error("missing subsystem-dimension header", lineno);
    }
    long total = 1;
    for (int d : dims) {
        if (d < 2) throw parse_error("subsystem dimension must be >= 2", lineno);
        total *= d;
    }

    Matrix m(total, total);
    long filled = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (filled >= total * total) {
                throw parse_error("more entries than the declared dimension allows", lineno);
            }
            double re, im;
            char comma = 0;
            std::istringstream ts(tok);
            if (!(ts >> re >> comma >> im) || comma != ',' || !(ts >> std::ws).eof()) {
                throw parse_error("bad matrix entry '" + tok + "', expected re,im", lineno);
            }
            m(filled / total, filled % total) = Complex(re, im);
            ++filled;
        }
    }
    if (filled != total * total) {
        std::ostringstream os;
        os << "expected " << total * total << " matrix entries, found " << filled;
        throw parse_error(os.str(), lineno);
    }
    try {
        return DensityMatrix(std::move(m), dims);
    } catch (const validation_error& e) {
        throw parse_error(std::string("state file is not a valid density matrix: ") + e.what(),
                          lineno);
    }
}

void save_state_file(const DensityMatrix& rho, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write state file '" + path + "'");
    }
    for (std::size_t i = 0; i < rho.dims().size(); ++i) {
        out << (i ? " " : "") << rho.dims()[i];
    }
    out << "\n";
    for (int i = 0; i < rho.dim(); ++i) {
        for (int j = 0; j < rho.dim(); ++j) {
            out << (j ? " " : "") << g12(rho.matrix()(i, j).real()) << ','
                << g12(rho.matrix()(i, j).imag());
        }
        out << "\n";
    }
}

Observable parse_observable(const std::string& name)
{
    std::string low = name;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (low == "x" || low == "sx" || low == "sigma1" || low == "1") return Observable::pauli_x();
    if (low == "y" || low == "sy" || low == "sigma2" || low == "2") return Observable::pauli_y();
    if (low == "z" || low == "sz" || low == "sigma3" || low == "3") return Observable::pauli_z();
    throw precondition_error("unknown observable '" + name + "' (use x, y or z)");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec)
{
    if (spec.grid < 2) {
        throw precondition_error("sweep: grid must have at least 2 points");
    }
    check_fixed_params(spec);

    std::string param_key;
    double lo = 0.0, hi = 0.0;
    bool half_open = false;
    switch (spec.family) {
    case Family::GGHZ:
        param_key = "beta";
        hi = 2.0 * std::numbers::pi;
        half_open = true; // beta ranges over [0, 2pi)
        break;
    case Family::GW:
        param_key = "theta";
        hi = std::numbers::pi;
        break;
    case Family::WernerGhz:
    case Family::GhzWMix:
        param_key = "p";
        hi = 1.0;
        break;
    case Family::RandomPure:
    case Family::RandomGinibre:
        throw precondition_error("sweep: family " + family_name(spec.family) +
                                 " has no one-dimensional parameter grid");
    }

    std::vector<SweepRow> rows(spec.grid);
    parallel_for(spec.grid, spec.jobs, [&](int i) {
        const double step = half_open ? (hi - lo) / spec.grid : (hi - lo) / (spec.grid - 1);
        // pin the closed upper endpoint so i*step round-off cannot leave the domain
        const double value = (!half_open && i == spec.grid - 1) ? hi : lo + i * step;
        StateFamilyPoint pt;
        pt.family = spec.family;
        pt.params = spec.fixed;
        pt.params[param_key] = value;
        pt.seed = spec.seed;
        rows[i].param = value;
        rows[i].report = theorem2_check(make_state(pt), spec.obs_x, spec.obs_z);
    });
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
    out << kSweepCsvHeader << "\n";
    for (const SweepRow& row : rows) {
        const BoundReport& r = row.report;
        out << g12(row.param) << ',' << g12(r.d_ab) << ',' << g12(r.d_ac) << ','
            << g12(r.discord_sum) << ',' << g12(r.bound_new) << ',' << g12(r.bound_hufan) << ','
            << g12(r.delta1) << ',' << g12(r.delta2) << ',' << g12(r.s_a) << ','
            << g12(r.lhs_uncertainty) << ',' << g12(r.q_mu) << ','
            << (r.monogamy_applicable ? 1 : 0) << "\n";
    }
}

void cmd_sweep(const SweepSpec& spec)
{
    const std::vector<SweepRow> rows = run_sweep(spec);
    std::ofstream out(spec.output, std::ios::binary); // LF line endings everywhere
    if (!out) {
        throw std::runtime_error("cannot open output file '" + spec.output + "'");
    }
    write_sweep_csv(rows, out);
    if (!out) {
        throw std::runtime_error("failed while writing '" + spec.output + "'");
    }
}

std::string theorem_name(Theorem t)
{
    switch (t) {
    case Theorem::Eq6: return "EQ6";
    case Theorem::T1_15: return "T1_15";
    case Theorem::T1_16: return "T1_16";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::Eq19: return "EQ19";
    case Theorem::HuFan: return "HUFAN";
    }
    throw precondition_error("theorem_name: unknown theorem");
}

Theorem parse_theorem(const std::string& name)
{
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (up == "EQ6") return Theorem::Eq6;
    if (up == "T1_15") return Theorem::T1_15;
    if (up == "T1_16") return Theorem::T1_16;
    if (up == "T2") return Theorem::T2;
    if (up == "T3") return Theorem::T3;
    if (up == "EQ19") return Theorem::Eq19;
    if (up == "HUFAN") return Theorem::HuFan;
    throw precondition_error("unknown theorem tag '" + name + "'");
}

namespace {

bool is_multipartite(Theorem t)
{
    return t == Theorem::T3 || t == Theorem::Eq19;
}

// EQ6 involves only entropic quantities; everything else carries optimized
// discord on the larger side of the inequality.
double check_tolerance(Theorem t)
{
    return t == Theorem::Eq6 ? 1e-9 : 1e-6;
}

double check_slack(Theorem t, const DensityMatrix& rho, const std::vector<Observable>& obs)
{
    if (is_multipartite(t)) {
        std::vector<int> assignments(obs.size());
        for (std::size_t i = 0; i < obs.size(); ++i) assignments[i] = static_cast<int>(i) + 1;
        const MultipartiteBoundReport r = theorem3_check(rho, obs, assignments);
        return t == Theorem::T3 ? r.theorem3_slack : r.eq19_slack;
    }
    if (t == Theorem::Eq6) { // discord-free path
        const double half_cond =
            0.5 * (conditional_entropy(rho, {0}, {1}) + conditional_entropy(rho, {0}, {2}));
        const double rhs = q_mu(obs[0], obs[1]) +
                           std::max(0.0, half_cond + delta_eq6(rho, obs[0], obs[1]));
        return tripartite_lhs(rho, obs[0], obs[1]) - rhs;
    }
    const BoundReport r = theorem2_check(rho, obs[0], obs[1]);
    switch (t) {
    case Theorem::T1_15: return r.lhs_uncertainty - r.rhs_eq15;
    case Theorem::T1_16: return r.lhs_uncertainty - r.rhs_eq16;
    case Theorem::T2: return r.theorem2_slack;
    case Theorem::HuFan: return r.bound_hufan - r.discord_sum;
    default: throw precondition_error("check_slack: unhandled theorem");
    }
}

} // namespace

CheckResult run_check(const CheckSpec& spec)
{
    if (spec.trials < 1) {
        throw precondition_error("check: trials must be >= 1");
    }
    int parts = spec.parts;
    if (parts == 0) parts = is_multipartite(spec.theorem) ? 4 : 3;
    if (is_multipartite(spec.theorem)) {
        if (parts != 3 && parts != 4) {
            throw precondition_error("check: T3/EQ19 support 3 or 4 subsystems");
        }
    } else if (parts != 3) {
        throw precondition_error("check: " + theorem_name(spec.theorem) +
                                 " requires a tripartite state");
    }

    std::vector<Observable> obs;
    if (parts == 3) {
        obs = {Observable::pauli_x(), Observable::pauli_z()};
    } else {
        obs = {Observable::pauli_x(), Observable::pauli_y(), Observable::pauli_z()};
    }

    const std::vector<int> dims(parts, 2);
    std::vector<double> slacks(spec.trials);
    parallel_for(spec.trials, spec.jobs, [&](int t) {
        StateFamilyPoint pt;
        pt.family = spec.source;
        pt.params = spec.params;
        pt.seed = spec.seed + static_cast<std::uint64_t>(t);
        pt.dims = dims;
        slacks[t] = check_slack(spec.theorem, make_state(pt), obs);
    });

    CheckResult out;
    out.theorem = spec.theorem;
    out.trials = spec.trials;
    out.tolerance = check_tolerance(spec.theorem);
    out.min_slack = slacks[0];
    out.worst_seed = spec.seed;
    double sum = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
        sum += slacks[t];
        if (slacks[t] < out.min_slack) {
            out.min_slack = slacks[t];
            out.worst_seed = spec.seed + static_cast<std::uint64_t>(t);
        }
        if (slacks[t] < -out.tolerance) ++out.violations;
    }
    out.mean_slack = sum / spec.trials;
    return out;
}

void write_check_report(const CheckResult& r, const CheckSpec& spec, std::ostream& out)
{
    out << "theorem: " << theorem_name(r.theorem) << "\n";
    out << "trials: " << r.trials << "\n";
    out << "source: " << family_name(spec.source) << "\n";
    out << "tolerance: " << g12(r.tolerance) << "\n";
    out << "min_slack: " << g12(r.min_slack) << " (seed " << r.worst_seed << ")\n";
    out << "mean_slack: " << g12(r.mean_slack) << "\n";
    out << "violations: " << r.violations << "\n";
    out << "result: " << (r.violations == 0 ? "PASS" : "FAIL") << "\n";
}

namespace {

void print_field(std::ostream& out, const char* name, double v)
{
    out << name << " = " << g12(v) << "\n";
}

void report_tripartite(const DensityMatrix& rho, const std::vector<Observable>& obs,
                       std::ostream& out)
{
    const BoundReport r = theorem2_check(rho, obs[0], obs[1]);
    const MonogamyForm mono = monogamy_form(rho, obs[0], obs[1]);
    print_field(out, "lhs_uncertainty", r.lhs_uncertainty);
    print_field(out, "c", r.c);
    print_field(out, "q_mu", r.q_mu);
    print_field(out, "delta", r.delta);
    print_field(out, "delta_p3", r.delta_p3);
    print_field(out, "delta_pp3", r.delta_pp3);
    print_field(out, "rhs_eq6", r.rhs_eq6);
    print_field(out, "rhs_eq15", r.rhs_eq15);
    print_field(out, "rhs_eq16", r.rhs_eq16);
    print_field(out, "delta1", r.delta1);
    print_field(out, "delta2", r.delta2);
    print_field(out, "delta_T", r.delta_t);
    print_field(out, "s_a", r.s_a);
    print_field(out, "D_AB", r.d_ab);
    print_field(out, "D_AC", r.d_ac);
    print_field(out, "J_AB", r.j_ab);
    print_field(out, "J_AC", r.j_ac);
    print_field(out, "I_AB", r.i_ab);
    print_field(out, "I_AC", r.i_ac);
    print_field(out, "discord_sum", r.discord_sum);
    print_field(out, "bound_new", r.bound_new);
    print_field(out, "bound_hufan", r.bound_hufan);
    print_field(out, "theorem2_slack", r.theorem2_slack);
    print_field(out, "monogamy_condition_gap", r.monogamy_condition_gap);
    out << "applicable_monogamy = " << (mono.applicable ? "true" : "false") << "\n";
    if (mono.applicable) {
        print_field(out, "monogamy_bound", mono.bound);
    }
    if (std::abs(r.lhs_uncertainty - r.q_mu) < 1e-9) {
        out << "note: S(X|B)+S(Z|C) saturates the incompatibility floor q_mu\n";
    }
}

void report_multipartite(const DensityMatrix& rho, const std::vector<Observable>& obs,
                         std::ostream& out)
{
    std::vector<int> assignments(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) assignments[i] = static_cast<int>(i) + 1;
    const MultipartiteBoundReport r = theorem3_check(rho, obs, assignments);
    out << "n = " << r.n << "\n";
    print_field(out, "b", r.b);
    print_field(out, "lhs", r.lhs);
    print_field(out, "delta_N", r.delta_n);
    print_field(out, "delta_pN", r.delta_pn);
    print_field(out, "delta1_N", r.delta1_n);
    print_field(out, "delta2_N", r.delta2_n);
    print_field(out, "s_a", r.s_a);
    print_field(out, "discord_sum", r.discord_sum);
    print_field(out, "theorem3_slack", r.theorem3_slack);
    print_field(out, "eq19_slack", r.eq19_slack);
    if (r.b_prime) {
        print_field(out, "b_prime_printed", *r.b_prime);
        print_field(out, "b_prime_alternative", *r.b_prime_alt);
    }
}

} // namespace

void run_report(const ReportSpec& spec, std::ostream& out)
{
    const DensityMatrix rho =
        spec.from_file ? load_state_file(spec.state_file) : make_state(spec.point);

    const int parts = rho.num_subsystems();
    if (parts != 3 && parts != 4) {
        throw precondition_error("report: supported states have 3 or 4 subsystems, got " +
                                 std::to_string(parts));
    }
    std::vector<Observable> obs = spec.observables;
    if (obs.empty()) {
        obs = parts == 3
                  ? std::vector<Observable>{Observable::pauli_x(), Observable::pauli_z()}
                  : std::vector<Observable>{Observable::pauli_x(), Observable::pauli_y(),
                                            Observable::pauli_z()};
    }
    if (static_cast<int>(obs.size()) != parts - 1) {
        std::ostringstream os;
        os << "report: " << parts << "-partite state needs " << parts - 1 << " observables, got "
           << obs.size();
        throw precondition_error(os.str());
    }

    out << "state: "
        << (spec.from_file ? spec.state_file : family_name(spec.point.family)) << "\n";
    if (!spec.from_file) {
        for (const auto& [key, value] : spec.point.params) {
            out << "param " << key << " = " << g12(value) << "\n";
        }
        if (spec.point.family == Family::RandomPure || spec.point.family == Family::RandomGinibre) {
            out << "seed = " << spec.point.seed << "\n";
        }
    }
    if (parts == 3) {
        report_tripartite(rho, obs, out);
    } else {
        report_multipartite(rho, obs, out);
    }
}

bool write_plotscript(const std::string& csv_path, std::ostream& out)
{
    std::ifstream in(csv_path);
    if (!in) {
        throw parse_error("cannot open CSV file '" + csv_path + "'", 0);
    }
    std::string header;
    if (!std::getline(in, header)) {
        throw parse_error("empty CSV file '" + csv_path + "'", 1);
    }
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != kSweepCsvHeader) {
        throw parse_error("CSV header does not match the sweep format", 1);
    }
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }

    out << "# generated by qcorr plotscript from " << csv_path << "\n";
    out << "set datafile separator \",\"\n";
    out << "set xlabel \"param\"\n";
    out << "set ylabel \"bits\"\n";
    out << "set grid\n";
    out << "set key top right\n";
    if (rows.empty()) {
        out << "# warning: CSV contained no data rows; drawing empty axes\n";
        out << "set xrange [0:1]\n";
        out << "set yrange [0:1]\n";
        out << "plot NaN notitle\n";
        return false;
    }
    out << "$DATA << EOD\n";
    for (const std::string& r : rows) out << r << "\n";
    out << "EOD\n";
    out << "plot $DATA using 1:4 with lines lw 2 title \"discord sum\", \\\n";
    out << "     $DATA using 1:5 with lines lw 2 title \"bound (new)\", \\\n";
    out << "     $DATA using 1:6 with lines lw 2 title \"bound (Hu-Fan)\"\n";
    return true;
}

} // namespace qcorr
