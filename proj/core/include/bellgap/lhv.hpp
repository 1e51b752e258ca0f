#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellgap/types.hpp"

namespace bellgap {

// Deterministic local strategy: a sign in {-1,+1} for each of the 2N
// observables {x,y} x {qubit 1..N}. These are the extreme points of the
// local-hidden-variable polytope: the correlation functionals are linear in
// each per-site response, and any stochastic model is a convex mixture of
// deterministic ones, so maxima of |<B+>|, |<B->| and of linear functionals
// over the model class are attained on these points. Exhaustive enumeration
// over them is therefore an exact computation of the local-reality bounds.
struct LhvAssignment {
    std::vector<int> x_signs;  // qubit 1 first
    std::vector<int> y_signs;
};

// Assignment index -> signs. Index digit for qubit k (base 4, qubit 1 most
// significant): bit 0 flips the x sign, bit 1 the y sign; 0 means +1.
LhvAssignment assignment_from_index(int n_qubits, std::uint64_t index);

// prod_k (x_k + i*y_k). The real part is the Plus value of this strategy,
// the imaginary part the Minus value. Each factor has modulus sqrt(2).
cdouble evaluate_assignment(const LhvAssignment& a);

struct EnumerationOptions {
    // Quotient by the global x-flip / y-flip symmetry (factor 4).
    bool symmetry_reduction = false;
    // Refuse scans larger than 4^cap_qubits assignments.
    int cap_qubits = kDefaultEnumerationCap;
    // 0 = hardware concurrency, additionally capped by BELLGAP_THREADS.
    int max_threads = 0;
};

enum class BoundMethod { Enumerated, Analytic };

struct LhvBoundResult {
    int n_qubits = 0;
    double max_abs_plus = 0;
    double max_abs_minus = 0;
    // max over strategies and sign pairs (s1,s2) of s1*Re + s2*Im; bounds
    // |<B+>| + |<B->| over every stochastic mixture.
    double max_sum = 0;
    LhvAssignment witness_plus;
    LhvAssignment witness_minus;
    LhvAssignment witness_sum;
    std::uint64_t assignments_scanned = 0;
    int reduction_factor = 1;
    BoundMethod method = BoundMethod::Enumerated;

    // Closed-form bounds for use above the enumeration cap; carries no
    // witnesses.
    static LhvBoundResult analytic(int n_qubits);
};

// Exact local-reality extremal values by exhaustive scan of all 4^N
// deterministic strategies (4^(N-1) under symmetry reduction). Results are
// identical regardless of thread count.
LhvBoundResult enumerate_bounds(int n_qubits, const EnumerationOptions& options = {});

struct AnalyticBounds {
    double individual;  // odd N: 2^((N-1)/2); even N: 2^(N/2)
    double sum;         // odd N: 2^((N+1)/2); even N: 2^(N/2)
};

AnalyticBounds analytic_bounds(int n_qubits);

struct MrsCheckItem {
    std::string quantity;
    double enumerated;
    double expected;
    bool asserted;  // participates in pass/fail (vs. informational)
    bool ok;
};

struct MrsReport {
    int n_qubits = 0;
    bool passed = false;
    std::vector<MrsCheckItem> items;
    LhvBoundResult bounds;
};

// Compares the enumerated maxima to the closed forms (tolerance 1e-9).
// Asserted quantities: the individual bounds for odd N, the sum bound for
// even N; the complementary quantities are reported as informational.
// A mismatch yields passed = false, never an exception.
MrsReport check_mrs(int n_qubits, const EnumerationOptions& options = {});

}  // namespace bellgap
