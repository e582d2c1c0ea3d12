#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcorr/entropy.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

DensityMatrix bell_state()
{
    Vector v = Vector::Zero(4);
    v[0] = v[3] = 1.0 / std::numbers::sqrt2;
    return project_pure(PureState(v, {2, 2}));
}

DensityMatrix ghz_state()
{
    return project_pure(make_gghz(std::numbers::pi / 4.0));
}

} // namespace

TEST_CASE("shannon entropy fixed points")
{
    CHECK(shannon_entropy(OutcomeDistribution({1.0, 0.0})) == 0.0);
    CHECK(shannon_entropy(OutcomeDistribution({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));

    // independent evaluation of -sum p log2 p
    const double expected = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
    CHECK(expected == doctest::Approx(0.811278124459133).epsilon(1e-12));
    CHECK(shannon_entropy(OutcomeDistribution({0.75, 0.25})) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("outcome distribution rejects non-normalized input")
{
    CHECK_THROWS_AS(OutcomeDistribution({0.4, 0.4}), precondition_error);
    CHECK_THROWS_AS(OutcomeDistribution({1.2, -0.2}), precondition_error);
    CHECK_THROWS_AS(OutcomeDistribution({}), precondition_error);
}

TEST_CASE("von Neumann entropy fixed points")
{
    CHECK(von_neumann_entropy(ghz_state()) <= 1e-12); // pure
    const DensityMatrix mixed1(Matrix::Identity(2, 2) / 2.0, {2});
    CHECK(von_neumann_entropy(mixed1) == doctest::Approx(1.0).epsilon(1e-12));
    const DensityMatrix mixed3(Matrix::Identity(8, 8) / 8.0, {2, 2, 2});
    CHECK(von_neumann_entropy(mixed3) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy fixed points")
{
    CHECK(conditional_entropy(bell_state(), {0}, {1}) == doctest::Approx(-1.0).epsilon(1e-10));

    const DensityMatrix a = random_ginibre({2}, 3);
    const DensityMatrix b = random_ginibre({2}, 4);
    const DensityMatrix prod(tensor(a.matrix(), b.matrix()), {2, 2});
    CHECK(conditional_entropy(prod, {0}, {1}) ==
          doctest::Approx(von_neumann_entropy(a)).epsilon(1e-10));

    // S(rho_AB) and S(rho_B) both equal 1 for the GHZ marginal
    CHECK(conditional_entropy(ghz_state(), {0}, {1}) == doctest::Approx(0.0).epsilon(1e-10));

    CHECK_THROWS_AS((void)conditional_entropy(ghz_state(), {0, 1}, {1}), precondition_error);
}

TEST_CASE("mutual information fixed points")
{
    const DensityMatrix a = random_ginibre({2}, 11);
    const DensityMatrix b = random_ginibre({2}, 12);
    const DensityMatrix prod(tensor(a.matrix(), b.matrix()), {2, 2});
    CHECK(std::abs(mutual_information(prod, {0}, {1})) <= 1e-10);
    CHECK(mutual_information(bell_state(), {0}, {1}) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mutual_information(ghz_state(), {0}, {1}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("post-measurement state: diagonal states are fixed points")
{
    // GHZ's AB marginal is classical in the sigma_z basis, so measuring z
    // leaves it untouched (the full GHZ state is not a fixed point: the
    // measurement kills its |000><111| coherences)
    const DensityMatrix rho = partial_trace(ghz_state(), {0, 1});
    const DensityMatrix pm = post_measurement_state(rho, Observable::pauli_z(), 0);
    CHECK((pm.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("post-measurement state of GHZ")
{
    const DensityMatrix rho = ghz_state();

    const DensityMatrix px = post_measurement_state(rho, Observable::pauli_x(), 0);
    const DensityMatrix rho_xb = partial_trace(px, {0, 1});
    CHECK((rho_xb.matrix() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-10);

    const DensityMatrix pz = post_measurement_state(rho, Observable::pauli_z(), 0);
    const DensityMatrix rho_zc = partial_trace(pz, {0, 2});
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK((rho_zc.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-10);

    CHECK_THROWS_AS((void)post_measurement_state(rho, Observable::pauli_x(), 5),
                    invalid_subsystem_error);
}

TEST_CASE("measurement distribution basics")
{
    // |0> (x) rho_B measured in the z basis: outcome 0 is certain
    const DensityMatrix rho_b = random_ginibre({2}, 21);
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    const DensityMatrix joint(tensor(p0, rho_b.matrix()), {2, 2});
    const auto meas = ProjectiveMeasurement::from_observable(Observable::pauli_z());
    const MeasurementOutcomes out = measurement_distribution(joint, meas, 0);
    // pauli_z eigenbasis is ascending (-1 first), so |0> is outcome index 1
    CHECK(out.probabilities.probabilities()[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(out.probabilities.probabilities()[0] <= 1e-12);
    CHECK(out.conditional_states[1].has_value());
    CHECK_FALSE(out.conditional_states[0].has_value()); // zero-probability branch absent
    CHECK((out.conditional_states[1]->matrix() - rho_b.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("measurement distribution on the Bell state")
{
    Vector v = Vector::Zero(4);
    v[0] = v[3] = 1.0 / std::numbers::sqrt2;
    const DensityMatrix rho = project_pure(PureState(v, {2, 2}));
    const auto meas = ProjectiveMeasurement::from_observable(Observable::pauli_z());
    const MeasurementOutcomes out = measurement_distribution(rho, meas, 0);
    CHECK(out.probabilities.probabilities()[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out.probabilities.probabilities()[1] == doctest::Approx(0.5).epsilon(1e-12));
    for (const auto& cond : out.conditional_states) {
        REQUIRE(cond.has_value());
        CHECK(von_neumann_entropy(*cond) <= 1e-10); // Schmidt structure: pure conditionals
    }
}

TEST_CASE("measurement distribution cross-checks the post-measurement state")
{
    for (double beta : {0.3, std::numbers::pi / 4.0, 1.2}) {
        const DensityMatrix rho = project_pure(make_gghz(beta));
        const Observable sx = Observable::pauli_x();
        const auto out = measurement_distribution(rho, ProjectiveMeasurement::from_observable(sx), 0);

        // reassemble sum_i p_i |x_i><x_i| (x) rho_BC|i from the distribution
        Matrix rebuilt = Matrix::Zero(8, 8);
        for (int i = 0; i < 2; ++i) {
            if (!out.conditional_states[i].has_value()) continue;
            Vector xi = sx.eigenvectors().col(i);
            rebuilt += out.probabilities.probabilities()[i] *
                       tensor(xi * xi.adjoint(), out.conditional_states[i]->matrix());
        }
        const DensityMatrix pm = post_measurement_state(rho, sx, 0);
        CHECK((rebuilt - pm.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("holevo quantity fixed points")
{
    const DensityMatrix a = random_ginibre({2}, 31);
    const DensityMatrix b = random_ginibre({2}, 32);
    const DensityMatrix prod(tensor(a.matrix(), b.matrix()), {2, 2});
    CHECK(std::abs(holevo_quantity(prod, Observable::pauli_x(), 0, {1})) <= 1e-10);

    const DensityMatrix ghz = ghz_state();
    CHECK(holevo_quantity(ghz, Observable::pauli_z(), 0, {1}) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(holevo_quantity(ghz, Observable::pauli_x(), 0, {1})) <= 1e-10);

    CHECK_THROWS_AS((void)holevo_quantity(ghz, Observable::pauli_x(), 0, {0}), precondition_error);
}

TEST_CASE("holevo equals mutual information of the measured joint state")
{
    const Observable sx = Observable::pauli_x();
    for (std::uint64_t s = 0; s < 100; ++s) {
        const DensityMatrix rho = random_ginibre({2, 2}, 5000 + s);
        const double hol = holevo_quantity(rho, sx, 0, {1});
        const double mi = mutual_information(post_measurement_state(rho, sx, 0), {0}, {1});
        CHECK(std::abs(hol - mi) <= 1e-9);
    }
}

TEST_CASE("measurement never increases mutual information or decreases joint entropy")
{
    const Observable sx = Observable::pauli_x();
    for (std::uint64_t s = 0; s < 60; ++s) {
        const DensityMatrix rho = random_ginibre({2, 2}, 6000 + s);
        const DensityMatrix pm = post_measurement_state(rho, sx, 0);
        CHECK(mutual_information(pm, {0}, {1}) <= mutual_information(rho, {0}, {1}) + 1e-9);
        CHECK(von_neumann_entropy(pm) >= von_neumann_entropy(rho) - 1e-9);
    }
}

TEST_CASE("strong subadditivity witness on random tripartite states")
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        const DensityMatrix rho = random_ginibre({2, 2, 2}, 7000 + s);
        const double sum =
            conditional_entropy(rho, {0}, {1}) + conditional_entropy(rho, {0}, {2});
        CHECK(sum >= -1e-9);
    }
}

TEST_CASE("measured conditional entropy composes post-measurement and conditioning")
{
    const DensityMatrix ghz = ghz_state();
    CHECK(measured_conditional_entropy(ghz, Observable::pauli_x(), 0, {1}) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(measured_conditional_entropy(ghz, Observable::pauli_z(), 0, {2})) <= 1e-10);
}
