#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

using namespace bellgap;
using testutil::cnear;
using testutil::near;

namespace {

ProductState uniform_plus_state(int n) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<QubitPure> qs;
    for (int k = 0; k < n; ++k) qs.emplace_back(cdouble(s, 0.0), cdouble(s, 0.0));
    return ProductState(std::move(qs));
}

}  // namespace

TEST_SUITE("separability") {

TEST_CASE("product Bell value on the documented states") {
    std::vector<QubitPure> ups(3, QubitPure({1.0, 0.0}, {0.0, 0.0}));
    CHECK(cnear(product_bell_value(ProductState(ups)), {0.0, 0.0}, 1e-15));

    CHECK(cnear(product_bell_value(uniform_plus_state(3)), {1.0, 0.0}, 1e-14));

    const double s = 1.0 / std::sqrt(2.0);
    const QubitPure tilted(cdouble(s, 0.0),
                           std::polar(s, std::numbers::pi / 8));
    const cdouble value = product_bell_value(ProductState({tilted, tilted}));
    CHECK(cnear(value, std::polar(1.0, std::numbers::pi / 4), 1e-14));
    CHECK(near(value.real(), s, 1e-14));
    CHECK(near(value.imag(), s, 1e-14));
}

TEST_CASE("product Bell value agrees with the sparse expectations") {
    for (int n = 1; n <= 6; ++n) {
        Rng rng(800 + n);
        std::vector<QubitPure> qs;
        for (int k = 0; k < n; ++k) qs.push_back(testutil::random_qubit(rng));
        const ProductState p(qs);
        const cdouble z = product_bell_value(p);
        const PureState psi = tensor_product(p);
        CHECK(near(z.real(), bell_expectation_pure(psi, BellKind::Plus), 1e-10));
        CHECK(near(z.imag(), bell_expectation_pure(psi, BellKind::Minus), 1e-10));
        CHECK(std::abs(z) <= 1.0 + 1e-12);
    }
}

TEST_CASE("separable Bell values on documented decompositions") {
    SeparableDecomposition saturating(3, {{1.0, uniform_plus_state(3)}});
    const auto [plus, minus] = separable_bell_values(saturating);
    CHECK(near(plus, 1.0, 1e-12));
    CHECK(near(minus, 0.0, 1e-12));

    // beta -> -beta on every qubit flips the sign of each factor; the even
    // mixture cancels.
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<QubitPure> flipped(3, QubitPure({s, 0.0}, {-s, 0.0}));
    SeparableDecomposition cancelling(
        3, {{0.5, uniform_plus_state(3)}, {0.5, ProductState(flipped)}});
    const auto [p2, m2] = separable_bell_values(cancelling);
    CHECK(near(p2, 0.0, 1e-12));
    CHECK(near(m2, 0.0, 1e-12));
}

TEST_CASE("random decompositions respect the separable bounds") {
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 250; ++trial) {
            const SeparableDecomposition d =
                random_separable(n, 1 + trial % 5, 1000 + 31 * n + trial);
            const auto [plus, minus] = separable_bell_values(d);
            CHECK(std::abs(plus) <= 1.0 + 1e-12);
            CHECK(std::abs(minus) <= 1.0 + 1e-12);
            CHECK(std::abs(plus) + std::abs(minus) <= std::numbers::sqrt2 + 1e-12);
        }
    }
}

TEST_CASE("separable values equal the assembled-density expectations") {
    for (int n = 2; n <= 6; ++n) {
        const SeparableDecomposition d = random_separable(n, 4, 77 + n);
        const auto [plus, minus] = separable_bell_values(d);
        const DensityOperator rho = assemble_density(d);
        CHECK(near(plus, bell_expectation_mixed(rho, BellKind::Plus), 1e-9));
        CHECK(near(minus, bell_expectation_mixed(rho, BellKind::Minus), 1e-9));
    }
}

TEST_CASE("decomposition validation") {
    CHECK_THROWS_AS(SeparableDecomposition(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        SeparableDecomposition(1, {{0.9, ProductState({QubitPure({1, 0}, {0, 0})})}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        SeparableDecomposition(2, {{1.0, ProductState({QubitPure({1, 0}, {0, 0})})}}),
        std::invalid_argument);
}

TEST_CASE("refinement leaves pure inputs alone") {
    Rng rng(4242);
    std::vector<MixedFactorTerm> terms;
    MixedFactorTerm term;
    term.weight = 1.0;
    for (int k = 0; k < 3; ++k) {
        const QubitPure q = testutil::random_qubit(rng);
        Eigen::Vector2cd v;
        v << q.alpha, q.beta;
        term.factors.push_back(v * v.adjoint());
    }
    terms.push_back(term);
    const MixedSeparableInput input(3, terms);
    const SeparableDecomposition refined = refine_to_pure(input);
    CHECK(refined.terms.size() == 1);
    CHECK(near(refined.terms[0].weight, 1.0, 1e-12));
    const Eigen::MatrixXcd original = assemble_density(input).matrix();
    CHECK((assemble_density(refined).matrix() - original).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("refining the maximally mixed qubit yields two half weights") {
    MixedFactorTerm term;
    term.weight = 1.0;
    term.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    const SeparableDecomposition refined = refine_to_pure(MixedSeparableInput(1, {term}));
    REQUIRE(refined.terms.size() == 2);
    CHECK(near(refined.terms[0].weight, 0.5, 1e-12));
    CHECK(near(refined.terms[1].weight, 0.5, 1e-12));
    // the two states are the basis states, up to phase
    for (const SeparableTerm& t : refined.terms) {
        const QubitPure& q = t.product.qubits[0];
        CHECK(near(std::max(std::abs(q.alpha), std::abs(q.beta)), 1.0, 1e-12));
    }
}

TEST_CASE("refining I/2 (x) |+><+| matches the assembled density") {
    MixedFactorTerm term;
    term.weight = 1.0;
    term.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    Eigen::Vector2cd plus;
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    term.factors.push_back(plus * plus.adjoint());
    const MixedSeparableInput input(2, {term});
    const SeparableDecomposition refined = refine_to_pure(input);
    CHECK(refined.terms.size() == 2);
    for (const SeparableTerm& t : refined.terms) CHECK(near(t.weight, 0.5, 1e-12));
    CHECK((assemble_density(refined).matrix() - assemble_density(input).matrix())
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
}

TEST_CASE("refinement preserves densities and Bell values on random inputs") {
    for (int n = 2; n <= 5; ++n) {
        const MixedSeparableInput input = testutil::random_mixed(n, 3, 910 + n);
        const SeparableDecomposition refined = refine_to_pure(input);
        CHECK((assemble_density(refined).matrix() - assemble_density(input).matrix())
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
        const auto [plus, minus] = separable_bell_values(refined);
        const DensityOperator rho = assemble_density(input);
        CHECK(near(plus, bell_expectation_mixed(rho, BellKind::Plus), 1e-10));
        CHECK(near(minus, bell_expectation_mixed(rho, BellKind::Minus), 1e-10));
    }
}

TEST_CASE("mixed input validation") {
    MixedFactorTerm bad_weight;
    bad_weight.weight = 0.9;
    bad_weight.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    CHECK_THROWS_AS(MixedSeparableInput(1, {bad_weight}), std::invalid_argument);

    MixedFactorTerm bad_trace;
    bad_trace.weight = 1.0;
    bad_trace.factors.push_back(Eigen::Matrix2cd::Identity());
    CHECK_THROWS_AS(MixedSeparableInput(1, {bad_trace}), std::invalid_argument);

    MixedFactorTerm negative;
    negative.weight = 1.0;
    Eigen::Matrix2cd neg;
    neg << 1.1, 0.0, 0.0, -0.1;
    negative.factors.push_back(neg);
    CHECK_THROWS_AS(MixedSeparableInput(1, {negative}), std::invalid_argument);
}

TEST_CASE("response tables on the documented factors") {
    MixedFactorTerm term;
    term.weight = 1.0;
    Eigen::Matrix2cd up = Eigen::Matrix2cd::Zero();
    up(0, 0) = 1.0;
    term.factors.push_back(up);
    Eigen::Vector2cd plus;
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    term.factors.push_back(plus * plus.adjoint());
    const LhvTable table = build_lhv_table(MixedSeparableInput(2, {term}));
    CHECK(near(table.x_values[0][0], 0.0, 1e-14));
    CHECK(near(table.y_values[0][0], 0.0, 1e-14));
    CHECK(near(table.x_values[1][0], 1.0, 1e-14));
    CHECK(near(table.y_values[1][0], 0.0, 1e-14));
}

TEST_CASE("response tables match the explicit trace oracle") {
    const MixedSeparableInput input = testutil::random_mixed(3, 4, 1234);
    const LhvTable table = build_lhv_table(input);
    for (size_t i = 0; i < input.terms.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            const Eigen::Matrix2cd& f = input.terms[i].factors[static_cast<size_t>(k)];
            // explicit 2x2 traces
            const cdouble tx = f(0, 1) + f(1, 0);
            const cdouble ty = cdouble(0, 1) * (f(0, 1) - f(1, 0));
            CHECK(near(table.x_values[static_cast<size_t>(k)][i], tx.real(), 1e-12));
            CHECK(near(table.y_values[static_cast<size_t>(k)][i], ty.real(), 1e-12));
            CHECK(std::abs(table.x_values[static_cast<size_t>(k)][i]) <= 1.0);
            CHECK(std::abs(table.y_values[static_cast<size_t>(k)][i]) <= 1.0);
        }
    }
}

TEST_CASE("hidden-variable representation holds exactly") {
    // single pure product term
    Rng rng(5150);
    MixedFactorTerm term;
    term.weight = 1.0;
    for (int k = 0; k < 2; ++k) {
        const QubitPure q = testutil::random_qubit(rng);
        Eigen::Vector2cd v;
        v << q.alpha, q.beta;
        term.factors.push_back(v * v.adjoint());
    }
    CHECK(verify_lhv_representation(MixedSeparableInput(2, {term})) < 1e-12);

    // maximally mixed three-qubit state
    MixedFactorTerm mixed;
    mixed.weight = 1.0;
    for (int k = 0; k < 3; ++k) mixed.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    CHECK(verify_lhv_representation(MixedSeparableInput(3, {mixed})) < 1e-12);

    // random five-term input
    CHECK(verify_lhv_representation(testutil::random_mixed(3, 5, 999)) < 1e-10);
}

TEST_CASE("representation check is refused above its dense cap") {
    MixedFactorTerm term;
    term.weight = 1.0;
    for (int k = 0; k < 11; ++k) term.factors.push_back(0.5 * Eigen::Matrix2cd::Identity());
    CHECK_THROWS_AS(verify_lhv_representation(MixedSeparableInput(11, {term})),
                    capacity_error);
}

TEST_CASE("optimizer reaches the bounds") {
    OptimizerConfig cfg;
    cfg.restarts = 16;
    cfg.rng_seed = 7;
    const OptimizeResult plus = maximize_over_separable(3, OptimTarget::Plus, cfg);
    CHECK(near(plus.value, 1.0, 1e-6));
    // witness qubits sit on the equator
    for (const QubitPure& q : plus.witness.qubits)
        CHECK(near(std::abs(q.alpha), std::abs(q.beta), 1e-5));

    const OptimizeResult sum = maximize_over_separable(2, OptimTarget::Sum, cfg);
    CHECK(near(sum.value, std::numbers::sqrt2, 1e-6));

    const OptimizeResult single = maximize_over_separable(1, OptimTarget::Plus, cfg);
    CHECK(near(single.value, 1.0, 1e-6));
    const OptimizeResult minus = maximize_over_separable(4, OptimTarget::Minus, cfg);
    CHECK(near(minus.value, 1.0, 1e-6));
}

TEST_CASE("optimizer never exceeds the bounds and is deterministic per seed") {
    OptimizerConfig cfg;
    cfg.restarts = 8;
    cfg.rng_seed = 123;
    for (OptimTarget target : {OptimTarget::Plus, OptimTarget::Minus, OptimTarget::Sum}) {
        const OptimizeResult a = maximize_over_separable(3, target, cfg);
        const OptimizeResult b = maximize_over_separable(3, target, cfg);
        const double bound =
            target == OptimTarget::Sum ? std::numbers::sqrt2 : 1.0;
        CHECK(a.value <= bound + 1e-9);
        CHECK(a.value == b.value);
        CHECK(a.best_restart == b.best_restart);
    }
}

TEST_CASE("random_separable is reproducible and well-formed") {
    const SeparableDecomposition single = random_separable(2, 1, 99);
    CHECK(single.terms.size() == 1);
    CHECK(near(single.terms[0].weight, 1.0, 1e-12));

    const SeparableDecomposition d = random_separable(3, 4, 7);
    double total = 0.0;
    for (const SeparableTerm& t : d.terms) total += t.weight;
    CHECK(near(total, 1.0, 1e-12));

    const SeparableDecomposition again = random_separable(3, 4, 7);
    for (size_t i = 0; i < d.terms.size(); ++i) {
        CHECK(d.terms[i].weight == again.terms[i].weight);
        for (int k = 0; k < 3; ++k) {
            CHECK(d.terms[i].product.qubits[static_cast<size_t>(k)].alpha ==
                  again.terms[i].product.qubits[static_cast<size_t>(k)].alpha);
        }
    }
}

}  // TEST_SUITE
