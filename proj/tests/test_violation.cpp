#include <numbers>

#include "doctest.h"

#include "bellgap/schmidt.hpp"
#include "bellgap/violation.hpp"
#include "test_util.hpp"

using namespace bellgap;
using testutil::near;

TEST_SUITE("violation") {

TEST_CASE("GHZ amplitudes") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState two = ghz_state({2, 0.0});
    CHECK(testutil::cnear(two.amplitude(0), {s, 0.0}, 1e-15));
    CHECK(testutil::cnear(two.amplitude(3), {s, 0.0}, 1e-15));
    CHECK(testutil::cnear(two.amplitude(1), {0.0, 0.0}, 1e-15));

    const PureState three = ghz_state({3, std::numbers::pi});
    CHECK(testutil::cnear(three.amplitude(0), {s, 0.0}, 1e-15));
    CHECK(testutil::cnear(three.amplitude(7), {-s, 0.0}, 1e-12));

    CHECK_THROWS_AS(ghz_state({1, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ghz_state({3, std::nan("")}), std::invalid_argument);
}

TEST_CASE("GHZ states are entangled across the first cut for every phase") {
    for (double theta : {0.0, 0.3, std::numbers::pi / 2, 5.0}) {
        const SchmidtResult result = schmidt_decompose(
            ghz_state({2, theta}), Bipartition::from_side_one(2, {1}));
        CHECK(result.rank == 2);
        CHECK(near(result.coefficients[0], 0.5, 1e-10));
    }
}

TEST_CASE("GHZ expectations at the documented phases") {
    const auto [p3, m3] = ghz_expectations({3, 0.0});
    CHECK(near(p3, 4.0, 1e-9));
    CHECK(near(m3, 0.0, 1e-9));

    const auto [p4, m4] = ghz_expectations({4, std::numbers::pi / 2});
    CHECK(near(p4, 0.0, 1e-9));
    CHECK(near(m4, 8.0, 1e-9));

    const auto [p5, m5] = ghz_expectations({5, std::numbers::pi / 4});
    CHECK(near(p5, 16.0 / std::numbers::sqrt2, 1e-9));
    CHECK(near(m5, 16.0 / std::numbers::sqrt2, 1e-9));
    CHECK(near(std::abs(p5) + std::abs(m5), 16.0 * std::numbers::sqrt2, 1e-9));
}

TEST_CASE("the squared expectations trace the circle of radius 2^(N-1)") {
    for (int n : {2, 3, 5, 8, 12, 20}) {
        for (double theta : {0.0, 0.31, 1.17, std::numbers::pi / 4, 4.4}) {
            const auto [plus, minus] = ghz_expectations({n, theta});
            const double radius2 = std::ldexp(1.0, 2 * (n - 1));
            CHECK(near((plus * plus + minus * minus) / radius2, 1.0, 1e-9));
        }
    }
}

TEST_CASE("violation reports reproduce the documented ratios") {
    const ViolationReport odd = violation_report({3, 0.0}, enumerate_bounds(3));
    CHECK(near(odd.ratio_vs_separable, 4.0, 1e-9));
    CHECK(near(odd.ratio_vs_lhv, 2.0, 1e-9));
    CHECK(odd.maximality_flag);

    const ViolationReport even =
        violation_report({2, std::numbers::pi / 4}, enumerate_bounds(2));
    CHECK(near(even.quantum_sum, 2.0 * std::numbers::sqrt2, 1e-9));
    CHECK(near(even.lhv_bound_sum, 2.0, 1e-9));
    CHECK(near(even.ratio_vs_lhv, std::numbers::sqrt2, 1e-9));
    CHECK(near(even.ratio_vs_separable, 2.0, 1e-9));

    const ViolationReport five = violation_report({5, std::numbers::pi / 2},
                                                  enumerate_bounds(5));
    CHECK(near(five.ratio_vs_separable, 16.0, 1e-9));
    CHECK(near(five.ratio_vs_lhv, 4.0, 1e-9));
    CHECK(five.maximality_flag);
}

TEST_CASE("report rejects mismatched bounds") {
    CHECK_THROWS_AS(violation_report({3, 0.0}, enumerate_bounds(4)),
                    std::invalid_argument);
}

TEST_CASE("ratio gap is 2^((N-1)/2) for odd N at the extremal phases") {
    for (int n : {3, 5, 7}) {
        const LhvBoundResult lhv = enumerate_bounds(n);
        for (double theta : {0.0, std::numbers::pi / 2}) {
            const ViolationReport report = violation_report({n, theta}, lhv);
            CHECK(near(report.ratio_vs_separable / report.ratio_vs_lhv,
                       std::ldexp(1.0, (n - 1) / 2), 1e-9));
            CHECK(report.maximality_flag);
        }
    }
}

TEST_CASE("maximality holds at the extremal phases for every tested N") {
    for (int n = 2; n <= 12; ++n) {
        const LhvBoundResult lhv =
            n <= 8 ? enumerate_bounds(n) : LhvBoundResult::analytic(n);
        CHECK(violation_report({n, 0.0}, lhv).maximality_flag);
        CHECK(violation_report({n, std::numbers::pi / 2}, lhv).maximality_flag);
        CHECK_FALSE(violation_report({n, std::numbers::pi / 4}, lhv).maximality_flag);
    }
}

TEST_CASE("sparse-path ratios agree with dense-path expectations") {
    for (int n = 2; n <= 8; ++n) {
        const LhvBoundResult lhv = enumerate_bounds(n);
        for (double theta : {0.0, std::numbers::pi / 4}) {
            const ViolationReport report = violation_report({n, theta}, lhv);
            const DensityOperator rho = density_from_pure(ghz_state({n, theta}));
            const double dense_plus =
                expectation(rho, testutil::bell_dense_oracle(n, BellKind::Plus));
            const double dense_minus =
                expectation(rho, testutil::bell_dense_oracle(n, BellKind::Minus));
            CHECK(near(report.quantum_plus, dense_plus, 1e-9));
            CHECK(near(report.quantum_minus, dense_minus, 1e-9));
            const double individual = std::max(std::abs(dense_plus), std::abs(dense_minus));
            const double sum = std::abs(dense_plus) + std::abs(dense_minus);
            const double dense_ratio = std::max(individual / kSeparableBoundIndividual,
                                                sum / kSeparableBoundSum);
            CHECK(near(report.ratio_vs_separable, dense_ratio, 1e-9));
        }
    }
}

TEST_CASE("analytic bounds serve the large-N reports") {
    const ViolationReport report = violation_report({15, 0.0}, LhvBoundResult::analytic(15));
    CHECK(report.lhv_method == BoundMethod::Analytic);
    CHECK(near(report.ratio_vs_separable, 16384.0, 1e-9));
    CHECK(near(report.ratio_vs_lhv, 128.0, 1e-9));
    CHECK(report.maximality_flag);
}

}  // TEST_SUITE
