#include "qcorr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/entropy.hpp"

namespace qcorr {

namespace {

constexpr double kMonogamyGapTol = 1e-8;

void check_observable_pair(const Observable& x, const Observable& z)
{
    if (x.dim() != z.dim()) {
        throw precondition_error("incompatibility_c: observables have different dimensions");
    }
    if (x.degenerate() || z.degenerate()) {
        throw unsupported_observable_error(
            "incompatibility_c: degenerate spectrum, eigenbasis is not unique");
    }
}

void check_tripartite(const DensityMatrix& rho, const Observable& x, const Observable& z,
                      const char* who)
{
    if (rho.num_subsystems() != 3) {
        std::ostringstream os;
        os << who << ": expected a three-subsystem state, got " << rho.num_subsystems();
        throw precondition_error(os.str());
    }
    if (x.dim() != rho.dims()[0] || z.dim() != rho.dims()[0]) {
        throw unsupported_dimension_error(std::string(who) +
                                          ": observables must act on subsystem A");
    }
}

} // namespace

double incompatibility_c(const Observable& x, const Observable& z)
{
    check_observable_pair(x, z);
    double c = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        for (int j = 0; j < z.dim(); ++j) {
            const Complex ov = x.eigenvectors().col(i).adjoint() * z.eigenvectors().col(j);
            c = std::max(c, std::norm(ov));
        }
    }
    return c;
}

double q_mu(const Observable& x, const Observable& z)
{
    return -std::log2(incompatibility_c(x, z));
}

double tripartite_lhs(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    check_tripartite(rho, x, z, "tripartite_lhs");
    return measured_conditional_entropy(rho, x, 0, {1}) +
           measured_conditional_entropy(rho, z, 0, {2});
}

double delta_eq6(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    check_tripartite(rho, x, z, "delta_eq6");
    const double i_ab = mutual_information(rho, {0}, {1});
    const double i_ac = mutual_information(rho, {0}, {2});
    const double hol_xb = holevo_quantity(rho, x, 0, {1});
    const double hol_zc = holevo_quantity(rho, z, 0, {2});
    return 0.5 * (i_ab + i_ac) - (hol_xb + hol_zc);
}

Theorem1Bounds theorem1_bounds(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    const BoundReport r = theorem2_check(rho, x, z);
    return {r.rhs_eq15, r.rhs_eq16, r.delta_p3, r.delta_pp3};
}

BoundReport theorem2_check(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    check_tripartite(rho, x, z, "theorem2_check");
    BoundReport r;
    r.c = incompatibility_c(x, z);
    r.q_mu = -std::log2(r.c);

    const double s_xb = measured_conditional_entropy(rho, x, 0, {1});
    const double s_zc = measured_conditional_entropy(rho, z, 0, {2});
    const double s_zb = measured_conditional_entropy(rho, z, 0, {1});
    r.lhs_uncertainty = s_xb + s_zc;

    const double s_ab = conditional_entropy(rho, {0}, {1});
    const double s_ac = conditional_entropy(rho, {0}, {2});
    const double half_cond = 0.5 * (s_ab + s_ac);
    r.s_a = von_neumann_entropy(partial_trace(rho, {0}));

    r.i_ab = mutual_information(rho, {0}, {1});
    r.i_ac = mutual_information(rho, {0}, {2});
    r.delta = 0.5 * (r.i_ab + r.i_ac) -
              (holevo_quantity(rho, x, 0, {1}) + holevo_quantity(rho, z, 0, {2}));

    const DiscordResult dab = classical_correlation(rho, 0, {1});
    const DiscordResult dac = classical_correlation(rho, 0, {2});
    r.d_ab = dab.discord;
    r.d_ac = dac.discord;
    r.j_ab = dab.classical_correlation;
    r.j_ac = dac.classical_correlation;
    r.discord_sum = r.d_ab + r.d_ac;

    r.delta_p3 = 0.5 * (r.d_ab + r.d_ac - r.j_ab - r.j_ac);
    r.delta_pp3 = r.d_ab + r.d_ac - 0.5 * (r.i_ab + r.i_ac);

    r.rhs_eq6 = r.q_mu + std::max(0.0, half_cond + r.delta);
    r.rhs_eq15 = r.q_mu + std::max(0.0, half_cond + r.delta_p3);
    r.rhs_eq16 = r.q_mu + std::max(0.0, half_cond + r.delta_pp3);

    r.delta1 = r.lhs_uncertainty - r.q_mu - half_cond;
    r.delta2 = -half_cond;
    r.delta_t = s_xb + s_zb - r.q_mu - s_ab;
    r.bound_new = r.delta1 + r.delta2 + r.s_a;
    r.bound_hufan = r.s_a + r.delta_t;
    r.theorem2_slack = r.bound_new - r.discord_sum;

    r.monogamy_condition_gap = r.s_a + conditional_entropy(rho, {0}, {1, 2});
    r.monogamy_applicable = std::abs(r.monogamy_condition_gap) < kMonogamyGapTol;
    return r;
}

double hufan_bound(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    check_tripartite(rho, x, z, "hufan_bound");
    const double s_xb = measured_conditional_entropy(rho, x, 0, {1});
    const double s_zb = measured_conditional_entropy(rho, z, 0, {1});
    const double s_ab = conditional_entropy(rho, {0}, {1});
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    return s_a + s_xb + s_zb - q_mu(x, z) - s_ab;
}

MonogamyForm monogamy_form(const DensityMatrix& rho, const Observable& x, const Observable& z)
{
    check_tripartite(rho, x, z, "monogamy_form");
    MonogamyForm out;
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    const double gap = s_a + conditional_entropy(rho, {0}, {1, 2});
    out.applicable = std::abs(gap) < kMonogamyGapTol;
    if (!out.applicable) return out;

    const double lhs = tripartite_lhs(rho, x, z);
    const double half_cond =
        0.5 * (conditional_entropy(rho, {0}, {1}) + conditional_entropy(rho, {0}, {2}));
    const double delta1 = lhs - q_mu(x, z) - half_cond;
    const double delta2 = -half_cond;
    out.bound = discord_one_sided(rho, {1, 2}).discord + delta1 + delta2;
    return out;
}

double multipartite_b(const std::vector<Observable>& observables)
{
    const int n = static_cast<int>(observables.size());
    if (n < 2) {
        throw precondition_error("multipartite_b: need at least two observables");
    }
    const int d = observables[0].dim();
    for (const Observable& o : observables) {
        if (o.dim() != d) {
            throw precondition_error("multipartite_b: observables have different dimensions");
        }
        if (o.degenerate()) {
            throw unsupported_observable_error("multipartite_b: degenerate observable");
        }
    }

    // ov[m](i, j) = |<u^{m+1}_i | u^{m+2}_j>|^2 between adjacent observables
    std::vector<Eigen::MatrixXd> ov;
    for (int m = 0; m + 1 < n; ++m) {
        Eigen::MatrixXd table(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const Complex o = observables[m].eigenvectors().col(i).adjoint() *
                                  observables[m + 1].eigenvectors().col(j);
                table(i, j) = std::norm(o);
            }
        }
        ov.push_back(std::move(table));
    }

    // iterate the summed indices i_2..i_{N-1}; i_1 is maximized inside,
    // i_N outside
    const int mid_count = n - 2;
    std::vector<int> tuple(std::max(mid_count, 0), 0);
    double best = 0.0;
    for (int i_n = 0; i_n < d; ++i_n) {
        auto index_of = [&](int m) { return m == n ? i_n : tuple[m - 2]; }; // m in 2..n
        std::fill(tuple.begin(), tuple.end(), 0);
        double total = 0.0;
        while (true) {
            double inner = 0.0;
            for (int i1 = 0; i1 < d; ++i1) {
                inner = std::max(inner, ov[0](i1, index_of(2)));
            }
            double term = inner;
            for (int m = 2; m <= n - 1; ++m) {
                term *= ov[m - 1](index_of(m), index_of(m + 1));
            }
            total += term;

            int k = mid_count - 1;
            while (k >= 0 && ++tuple[k] == d) {
                tuple[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
        best = std::max(best, total);
    }
    return best;
}

namespace {

double b_prime_impl(const std::vector<Observable>& observables, bool printed)
{
    if (observables.size() != 3) {
        throw precondition_error("b_prime: exactly three observables required");
    }
    const Observable& m1 = observables[0];
    const Observable& m2 = observables[1];
    const Observable& m3 = observables[2];
    const int d = m1.dim();
    if (m2.dim() != d || m3.dim() != d) {
        throw precondition_error("b_prime: observables have different dimensions");
    }
    auto overlap2 = [](const Observable& a, int i, const Observable& b, int j) {
        const Complex o = a.eigenvectors().col(i).adjoint() * b.eigenvectors().col(j);
        return std::norm(o);
    };
    double best = 0.0;
    for (int k = 0; k < d; ++k) {
        double total = 0.0;
        for (int j = 0; j < d; ++j) {
            double inner = 0.0;
            for (int i = 0; i < d; ++i) {
                inner = std::max(inner, overlap2(m1, i, m2, j));
            }
            total += inner * (printed ? overlap2(m3, j, m3, k) : overlap2(m2, j, m3, k));
        }
        best = std::max(best, total);
    }
    return best;
}

} // namespace

double b_prime_printed(const std::vector<Observable>& observables)
{
    return b_prime_impl(observables, true);
}

double b_prime_alternative(const std::vector<Observable>& observables)
{
    return b_prime_impl(observables, false);
}

MultipartiteBoundReport theorem3_check(const DensityMatrix& rho,
                                       const std::vector<Observable>& observables,
                                       const std::vector<int>& assignments)
{
    const int n = static_cast<int>(observables.size());
    if (rho.num_subsystems() != n + 1) {
        std::ostringstream os;
        os << "theorem3_check: " << n << " observables need " << n + 1 << " subsystems, state has "
           << rho.num_subsystems();
        throw precondition_error(os.str());
    }
    if (rho.dims()[0] != 2) {
        throw unsupported_dimension_error("theorem3_check: subsystem A must be a qubit");
    }
    if (static_cast<int>(assignments.size()) != n) {
        throw precondition_error("theorem3_check: one memory assignment per observable required");
    }
    std::vector<int> seen = assignments;
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n; ++i) {
        if (seen[i] != i + 1) {
            throw precondition_error(
                "theorem3_check: assignments must be a bijection onto the memory subsystems");
        }
    }
    for (const Observable& o : observables) {
        if (o.dim() != 2) {
            throw unsupported_dimension_error("theorem3_check: observables must act on qubit A");
        }
    }

    MultipartiteBoundReport r;
    r.n = n;
    r.b = multipartite_b(observables);

    double sum_cond = 0.0, sum_sax = 0.0, sum_iax = 0.0, sum_holevo = 0.0, sum_discord = 0.0;
    for (int i = 0; i < n; ++i) {
        const int mem = assignments[i];
        sum_cond += measured_conditional_entropy(rho, observables[i], 0, {mem});
        sum_sax += conditional_entropy(rho, {0}, {mem});
        sum_iax += mutual_information(rho, {0}, {mem});
        sum_holevo += holevo_quantity(rho, observables[i], 0, {mem});
        sum_discord += classical_correlation(rho, 0, {mem}).discord;
    }
    r.lhs = sum_cond;
    r.s_a = von_neumann_entropy(partial_trace(rho, {0}));
    r.discord_sum = sum_discord;

    const double frac = static_cast<double>(n - 1) / n;
    r.delta_n = frac * sum_iax - sum_holevo;
    r.delta_pn = sum_discord - sum_iax / n;
    r.delta1_n = sum_cond + std::log2(r.b) - frac * sum_sax;
    r.delta2_n = -sum_sax / n;
    r.theorem3_slack = r.delta1_n + r.delta2_n + r.s_a - r.discord_sum;
    r.eq19_slack = sum_cond - (-std::log2(r.b) + std::max(0.0, frac * sum_sax + r.delta_pn));

    if (n == 3) {
        r.b_prime = b_prime_printed(observables);
        r.b_prime_alt = b_prime_alternative(observables);
    }
    return r;
}

double corollary_eq19_check(const DensityMatrix& rho, const std::vector<Observable>& observables,
                            const std::vector<int>& assignments)
{
    return theorem3_check(rho, observables, assignments).eq19_slack;
}

} // namespace qcorr
