#pragma once

#include <utility>

#include "bellgap/lhv.hpp"
#include "bellgap/separability.hpp"
#include "bellgap/states.hpp"

namespace bellgap {

// (|up...up> + e^{i theta} |down...down>) / sqrt(2), N >= 2.
struct GhzSpec {
    int n_qubits;
    double theta;
};

PureState ghz_state(const GhzSpec& ghz);

// (Plus, Minus) expectations computed through the two-entry operator
// structure; equal to 2^(N-1) * (cos theta, sin theta), which is checked
// internally.
std::pair<double, double> ghz_expectations(const GhzSpec& ghz);

struct ViolationReport {
    int n_qubits = 0;
    double theta = 0;
    double quantum_plus = 0;
    double quantum_minus = 0;
    double quantum_sum = 0;  // |plus| + |minus|
    double separable_bound_individual = kSeparableBoundIndividual;
    double separable_bound_sum = kSeparableBoundSum;
    double lhv_bound_individual = 0;
    double lhv_bound_sum = 0;
    BoundMethod lhv_method = BoundMethod::Enumerated;
    // Largest violation factor across the three separable inequalities.
    double ratio_vs_separable = 0;
    // Individual form for odd N, sum form for even N.
    double ratio_vs_lhv = 0;
    // Quantum value reaches the operator norm 2^(N-1) within 1e-9; a
    // numerical certificate, not a theorem.
    bool maximality_flag = false;
};

// Compares the GHZ expectations against the separable bounds and the
// supplied local-reality bounds (which must be for the same N).
ViolationReport violation_report(const GhzSpec& ghz, const LhvBoundResult& lhv);

}  // namespace bellgap
