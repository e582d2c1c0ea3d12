// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/bounds.hpp"
#include "qcorr/cli.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

class Criterion {
public:
    Criterion(int id, std::string label, double budget_seconds)
        : id_(id), label_(std::move(label)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now())
    {
    }

    void require(bool ok, const std::string& detail)
    {
        if (!ok && failure_.empty()) failure_ = detail;
    }

    ~Criterion()
    {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (failure_.empty() && elapsed > budget_) {
            std::ostringstream os;
            os << "runtime " << elapsed << " s exceeded budget " << budget_ << " s";
            failure_ = os.str();
        }
        if (failure_.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.2f s)\n", id_, label_.c_str(), elapsed);
        } else {
            std::printf("[FAIL] criterion %2d: %s — %s\n", id_, label_.c_str(), failure_.c_str());
            ++g_failures;
        }
        std::fflush(stdout);
    }

private:
    int id_;
    std::string label_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::string failure_;
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

DensityMatrix bell_state()
{
    Vector v = Vector::Zero(4);
    v[0] = v[3] = 1.0 / std::numbers::sqrt2;
    return project_pure(PureState(v, {2, 2}));
}

void criterion1()
{
    Criterion c(1, "incompatibility constants", 1.0);
    const double q = q_mu(Observable::pauli_x(), Observable::pauli_z());
    c.require(std::abs(q - 1.0) <= 1e-12, "q_MU(x,z) = " + num(q));

    GaussianStream gs(424242);
    int tested = 0;
    while (tested < 20) {
        Matrix g1(2, 2), g2(2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                g1(i, j) = gs.next_complex();
                g2(i, j) = gs.next_complex();
            }
        }
        const Observable o1(0.5 * (g1 + g1.adjoint().eval()));
        const Observable o2(0.5 * (g2 + g2.adjoint().eval()));
        if (o1.degenerate() || o2.degenerate()) continue;
        ++tested;
        const double diff = std::abs(multipartite_b({o1, o2}) - incompatibility_c(o1, o2));
        c.require(diff <= 1e-12, "N=2 reduction gap " + num(diff));
    }
}

void criterion2()
{
    Criterion c(2, "entropy oracle fixed points", 1.0);
    const DensityMatrix bell = bell_state();
    c.require(std::abs(conditional_entropy(bell, {0}, {1}) + 1.0) <= 1e-9, "Bell S(A|B)");
    c.require(std::abs(mutual_information(bell, {0}, {1}) - 2.0) <= 1e-9, "Bell I(A:B)");
    const DensityMatrix mixed(Matrix::Identity(8, 8) / 8.0, {2, 2, 2});
    c.require(std::abs(von_neumann_entropy(mixed) - 3.0) <= 1e-9, "S(I8/8)");
    const DensityMatrix ghz = project_pure(make_gghz(kPi / 4.0));
    c.require(std::abs(holevo_quantity(ghz, Observable::pauli_z(), 0, {1}) - 1.0) <= 1e-9,
              "GHZ I(Z:B)");
    c.require(std::abs(holevo_quantity(ghz, Observable::pauli_x(), 0, {1})) <= 1e-9,
              "GHZ I(X:B)");
}

void criterion3()
{
    Criterion c(3, "discord optimizer vs 512x512 grid oracle", 120.0);
    const double bell_d = classical_correlation(bell_state(), 0, {1}).discord;
    c.require(std::abs(bell_d - 1.0) <= 1e-6, "Bell discord = " + num(bell_d));
    for (std::uint64_t s = 0; s < 50; ++s) {
        const DensityMatrix rho = random_ginibre({2, 2}, 90000 + s);
        const double opt = classical_correlation(rho, 0, {1}).discord;
        const double oracle = discord_oracle(rho, 0, {1}, 512);
        if (std::abs(opt - oracle) > 1e-4) {
            c.require(false, "seed " + std::to_string(90000 + s) + " gap " + num(opt - oracle));
            break;
        }
    }
}

std::vector<SweepRow> family_sweep(Family family, int grid)
{
    SweepSpec spec;
    spec.family = family;
    spec.grid = grid;
    return run_sweep(spec);
}

void criterion4()
{
    Criterion c(4, "generalized-GHZ sweep: zero discord, bounds coincide", 60.0);
    for (const SweepRow& row : family_sweep(Family::GGHZ, 201)) {
        if (std::abs(row.report.d_ab) > 1e-6 || std::abs(row.report.d_ac) > 1e-6) {
            c.require(false, "nonzero discord at beta = " + num(row.param));
            return;
        }
        if (std::abs(row.report.bound_new - row.report.bound_hufan) > 1e-6) {
            c.require(false, "bounds differ at beta = " + num(row.param));
            return;
        }
    }
}

void criterion5()
{
    Criterion c(5, "generalized-W sweep at phi = pi/4: bounds coincide", 60.0);
    for (const SweepRow& row : family_sweep(Family::GW, 201)) {
        if (std::abs(row.report.bound_new - row.report.bound_hufan) > 1e-6) {
            c.require(false, "bounds differ at theta = " + num(row.param));
            return;
        }
    }
}

void criterion6()
{
    Criterion c(6, "Werner-GHZ sweep: constant Hu-Fan bound, decreasing new bound", 60.0);
    const auto rows = family_sweep(Family::WernerGhz, 101);
    double prev = rows.front().report.bound_new;
    for (const SweepRow& row : rows) {
        if (std::abs(row.report.bound_hufan - 1.0) > 1e-6) {
            c.require(false, "Hu-Fan bound not 1 at p = " + num(row.param));
            return;
        }
        if (row.report.bound_new > row.report.bound_hufan + 1e-9) {
            c.require(false, "ordering violated at p = " + num(row.param));
            return;
        }
        if (row.report.bound_new > prev + 1e-9) {
            c.require(false, "bound_new not monotone at p = " + num(row.param));
            return;
        }
        prev = row.report.bound_new;
    }
    c.require(std::abs(rows.back().report.bound_new) <= 1e-6,
              "bound_new(1) = " + num(rows.back().report.bound_new));
}

void criterion7()
{
    Criterion c(7, "GHZ-W mixture sweep: new bound strictly tighter inside", 60.0);
    double max_gap = 0.0;
    const auto rows = family_sweep(Family::GhzWMix, 101);
    for (const SweepRow& row : rows) {
        const double gap = row.report.bound_hufan - row.report.bound_new;
        if (gap < -1e-9) {
            c.require(false, "ordering violated at p = " + num(row.param));
            return;
        }
        if (row.param > 0.0 && row.param < 1.0) max_gap = std::max(max_gap, gap);
    }
    c.require(max_gap > 0.01, "max interior gap " + num(max_gap));
}

void criterion8()
{
    Criterion c(8, "randomized theorem campaign", 600.0);
    const std::vector<std::pair<Theorem, int>> plan = {
        {Theorem::Eq6, 200},  {Theorem::T1_15, 200}, {Theorem::T1_16, 200},
        {Theorem::T2, 200},   {Theorem::T3, 100},    {Theorem::Eq19, 100},
    };
    for (const auto& [theorem, trials] : plan) {
        CheckSpec spec;
        spec.theorem = theorem;
        spec.trials = trials;
        spec.seed = 31337;
        const CheckResult r = run_check(spec);
        if (r.violations != 0) {
            std::ostringstream os;
            os << theorem_name(theorem) << ": " << r.violations << " violations, min slack "
               << r.min_slack << " (seed " << r.worst_seed << ")";
            c.require(false, os.str());
            return;
        }
    }
}

void criterion9()
{
    Criterion c(9, "pure-state structure and monogamy equivalence", 180.0);
    const Observable sx = Observable::pauli_x(), sz = Observable::pauli_z();
    for (std::uint64_t s = 0; s < 100; ++s) {
        const DensityMatrix rho = project_pure(random_haar_pure({2, 2, 2}, 70000 + s));
        const double cond_sum =
            conditional_entropy(rho, {0}, {1}) + conditional_entropy(rho, {0}, {2});
        if (std::abs(cond_sum) > 1e-9) {
            c.require(false, "S(A|B)+S(A|C) = " + num(cond_sum) + " at seed " +
                                 std::to_string(70000 + s));
            return;
        }
        const MonogamyForm m = monogamy_form(rho, sx, sz);
        if (!m.applicable) {
            c.require(false, "monogamy flag unset at seed " + std::to_string(70000 + s));
            return;
        }
        const double hufan = hufan_bound(rho, sx, sz);
        if (std::abs(m.bound - hufan) > 1e-6) {
            c.require(false, "bound gap " + num(m.bound - hufan) + " at seed " +
                                 std::to_string(70000 + s));
            return;
        }
    }
}

void criterion10()
{
    Criterion c(10, "GHZ saturates the tripartite uncertainty floor", 1.0);
    const double lhs =
        tripartite_lhs(project_pure(make_gghz(kPi / 4.0)), Observable::pauli_x(),
                       Observable::pauli_z());
    c.require(std::abs(lhs - 1.0) <= 1e-9, "lhs = " + num(lhs));
}

void criterion11()
{
    Criterion c(11, "determinism of sweep and check outputs", 120.0);

    SweepSpec sweep;
    sweep.family = Family::GhzWMix;
    sweep.grid = 21;
    sweep.seed = 7;
    std::ostringstream csv1, csv2;
    write_sweep_csv(run_sweep(sweep), csv1);
    write_sweep_csv(run_sweep(sweep), csv2);
    c.require(csv1.str() == csv2.str(), "sweep CSV bytes differ between runs");

    CheckSpec check;
    check.theorem = Theorem::T2;
    check.trials = 20;
    check.seed = 99;
    std::ostringstream rep1, rep2;
    write_check_report(run_check(check), check, rep1);
    write_check_report(run_check(check), check, rep2);
    c.require(rep1.str() == rep2.str(), "check report bytes differ between runs");
}

} // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
