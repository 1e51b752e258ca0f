#include <set>

#include "doctest.h"

#include "bellgap/lhv.hpp"
#include "bellgap/rng.hpp"
#include "test_util.hpp"

using namespace bellgap;
using testutil::cnear;
using testutil::near;

namespace {

// Independent brute force: walk every assignment index and evaluate the
// product directly, without the production split-scan machinery.
struct BruteResult {
    double max_abs_plus = 0;
    double max_abs_minus = 0;
    double max_sum = 0;
};

BruteResult brute_force(int n) {
    BruteResult r;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
        const cdouble z = evaluate_assignment(assignment_from_index(n, idx));
        r.max_abs_plus = std::max(r.max_abs_plus, std::abs(z.real()));
        r.max_abs_minus = std::max(r.max_abs_minus, std::abs(z.imag()));
        r.max_sum = std::max(r.max_sum, std::abs(z.real()) + std::abs(z.imag()));
    }
    return r;
}

}  // namespace

TEST_SUITE("lhv") {

TEST_CASE("assignment products on tiny cases") {
    LhvAssignment all_plus_2{{1, 1}, {1, 1}};
    CHECK(cnear(evaluate_assignment(all_plus_2), {0.0, 2.0}, 1e-15));

    LhvAssignment mixed_1{{1}, {-1}};
    CHECK(cnear(evaluate_assignment(mixed_1), {1.0, -1.0}, 1e-15));

    LhvAssignment all_plus_3{{1, 1, 1}, {1, 1, 1}};
    CHECK(cnear(evaluate_assignment(all_plus_3), {-2.0, 2.0}, 1e-15));
}

TEST_CASE("assignment validation") {
    CHECK_THROWS_AS(evaluate_assignment(LhvAssignment{{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_assignment(LhvAssignment{{1, 0}, {1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_assignment(LhvAssignment{{1}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("every assignment has modulus 2^(N/2)") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 8);
        const std::uint64_t idx = rng.next_u64() & ((std::uint64_t{1} << (2 * n)) - 1);
        const cdouble z = evaluate_assignment(assignment_from_index(n, idx));
        CHECK(near(std::abs(z), std::pow(2.0, n / 2.0), 1e-12));
    }
}

TEST_CASE("parity structure of the extreme points") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
            const cdouble z = evaluate_assignment(assignment_from_index(n, idx));
            if (n % 2 == 0) {
                // purely real or purely imaginary
                CHECK(std::min(std::abs(z.real()), std::abs(z.imag())) <= 1e-12);
            } else {
                CHECK(near(std::abs(z.real()), std::abs(z.imag()), 1e-12));
                CHECK(near(std::abs(z.real()), std::ldexp(1.0, (n - 1) / 2), 1e-12));
            }
        }
    }
}

TEST_CASE("global sign flips leave the extremal values unchanged") {
    Rng rng(57);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 6);
        const std::uint64_t idx = rng.next_u64() & ((std::uint64_t{1} << (2 * n)) - 1);
        LhvAssignment a = assignment_from_index(n, idx);
        const cdouble z = evaluate_assignment(a);
        LhvAssignment flipped_x = a;
        for (int& s : flipped_x.x_signs) s = -s;
        LhvAssignment flipped_y = a;
        for (int& s : flipped_y.y_signs) s = -s;
        for (const LhvAssignment& other : {flipped_x, flipped_y}) {
            const cdouble w = evaluate_assignment(other);
            CHECK(near(std::abs(w.real()), std::abs(z.real()), 1e-12));
            CHECK(near(std::abs(w.imag()), std::abs(z.imag()), 1e-12));
        }
    }
}

TEST_CASE("enumerated bounds at small N") {
    const LhvBoundResult three = enumerate_bounds(3);
    CHECK(near(three.max_abs_plus, 2.0, 1e-9));
    CHECK(near(three.max_abs_minus, 2.0, 1e-9));
    CHECK(three.assignments_scanned == 64);
    CHECK(three.reduction_factor == 1);

    const LhvBoundResult two = enumerate_bounds(2);
    CHECK(near(two.max_sum, 2.0, 1e-9));

    const LhvBoundResult four = enumerate_bounds(4);
    CHECK(near(four.max_sum, 4.0, 1e-9));
    CHECK(near(four.max_abs_plus, 4.0, 1e-9));
}

TEST_CASE("the four-qubit extreme set is {(±4,0),(0,±4)} plus interior points") {
    std::set<std::pair<double, double>> values;
    double best = 0.0;
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        const cdouble z = evaluate_assignment(assignment_from_index(4, idx));
        values.insert({z.real(), z.imag()});
        best = std::max(best, std::abs(z.real()) + std::abs(z.imag()));
    }
    CHECK(values.count({4.0, 0.0}) == 1);
    CHECK(values.count({-4.0, 0.0}) == 1);
    CHECK(values.count({0.0, 4.0}) == 1);
    CHECK(values.count({0.0, -4.0}) == 1);
    CHECK(best == 4.0);
    for (const auto& [re, im] : values) {
        CHECK(std::abs(re) <= 4.0);
        CHECK(std::abs(im) <= 4.0);
    }
}

TEST_CASE("production scan matches the independent brute force") {
    for (int n = 1; n <= 6; ++n) {
        const BruteResult brute = brute_force(n);
        const LhvBoundResult scanned = enumerate_bounds(n);
        CHECK(scanned.max_abs_plus == brute.max_abs_plus);
        CHECK(scanned.max_abs_minus == brute.max_abs_minus);
        CHECK(scanned.max_sum == brute.max_sum);
    }
}

TEST_CASE("witnesses actually achieve the reported maxima") {
    for (int n = 2; n <= 7; ++n) {
        const LhvBoundResult result = enumerate_bounds(n);
        CHECK(near(std::abs(evaluate_assignment(result.witness_plus).real()),
                   result.max_abs_plus, 1e-12));
        CHECK(near(std::abs(evaluate_assignment(result.witness_minus).imag()),
                   result.max_abs_minus, 1e-12));
        const cdouble z = evaluate_assignment(result.witness_sum);
        CHECK(near(std::abs(z.real()) + std::abs(z.imag()), result.max_sum, 1e-12));
        CHECK(result.max_sum >= std::max(result.max_abs_plus, result.max_abs_minus));
    }
}

TEST_CASE("closed-form bounds") {
    CHECK(analytic_bounds(5).individual == 4.0);
    CHECK(analytic_bounds(6).sum == 8.0);
    CHECK(analytic_bounds(1).individual == 1.0);
    CHECK(analytic_bounds(3).sum == 4.0);
    CHECK(analytic_bounds(4).individual == 4.0);
}

TEST_CASE("enumeration equals the closed forms through N=8") {
    for (int n = 1; n <= 8; ++n) {
        const LhvBoundResult scanned = enumerate_bounds(n);
        const AnalyticBounds expected = analytic_bounds(n);
        CHECK(near(scanned.max_abs_plus, expected.individual, 1e-9));
        CHECK(near(scanned.max_abs_minus, expected.individual, 1e-9));
        CHECK(near(scanned.max_sum, expected.sum, 1e-9));
    }
}

TEST_CASE("bound checks pass on the documented cases") {
    const MrsReport three = check_mrs(3);
    CHECK(three.passed);
    CHECK(near(three.bounds.max_abs_plus, 2.0, 1e-9));

    const MrsReport four = check_mrs(4);
    CHECK(four.passed);
    CHECK(near(four.bounds.max_sum, 4.0, 1e-9));

    const MrsReport seven = check_mrs(7);
    CHECK(seven.passed);
    CHECK(near(seven.bounds.max_abs_plus, 8.0, 1e-9));
}

TEST_CASE("symmetry reduction scans a quarter of the space, same maxima") {
    for (int n = 2; n <= 6; ++n) {
        EnumerationOptions reduced;
        reduced.symmetry_reduction = true;
        const LhvBoundResult full = enumerate_bounds(n);
        const LhvBoundResult quarter = enumerate_bounds(n, reduced);
        CHECK(quarter.assignments_scanned == (std::uint64_t{1} << (2 * n)) / 4);
        CHECK(quarter.reduction_factor == 4);
        CHECK(quarter.max_abs_plus == full.max_abs_plus);
        CHECK(quarter.max_abs_minus == full.max_abs_minus);
        CHECK(quarter.max_sum == full.max_sum);
    }
}

TEST_CASE("thread count does not change the result") {
    EnumerationOptions single;
    single.max_threads = 1;
    EnumerationOptions many;
    many.max_threads = 8;
    const LhvBoundResult a = enumerate_bounds(7, single);
    const LhvBoundResult b = enumerate_bounds(7, many);
    CHECK(a.max_abs_plus == b.max_abs_plus);
    CHECK(a.max_abs_minus == b.max_abs_minus);
    CHECK(a.max_sum == b.max_sum);
    CHECK(a.witness_plus.x_signs == b.witness_plus.x_signs);
    CHECK(a.witness_plus.y_signs == b.witness_plus.y_signs);
    CHECK(a.witness_sum.x_signs == b.witness_sum.x_signs);
}

TEST_CASE("capacity rules") {
    EnumerationOptions tight;
    tight.cap_qubits = 3;
    CHECK_THROWS_AS(enumerate_bounds(4, tight), capacity_error);
    tight.symmetry_reduction = true;
    CHECK_NOTHROW(enumerate_bounds(4, tight));
    CHECK_THROWS_AS(enumerate_bounds(30), capacity_error);
    CHECK_THROWS_AS(enumerate_bounds(0), std::invalid_argument);
}

TEST_CASE("analytic stand-in carries the closed forms") {
    const LhvBoundResult analytic = LhvBoundResult::analytic(15);
    CHECK(analytic.method == BoundMethod::Analytic);
    CHECK(analytic.max_abs_plus == 128.0);
    CHECK(analytic.max_sum == 256.0);
    CHECK(analytic.assignments_scanned == 0);
}

}  // TEST_SUITE
