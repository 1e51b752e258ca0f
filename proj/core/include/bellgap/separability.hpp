#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "bellgap/states.hpp"

namespace bellgap {

// Bounds obeyed by every separable state: |<B+>| <= 1, |<B->| <= 1,
// |<B+>| + |<B->| <= sqrt(2).
inline constexpr double kSeparableBoundIndividual = 1.0;
inline constexpr double kSeparableBoundSum = std::numbers::sqrt2;

struct SeparableTerm {
    double weight;  // > 0
    ProductState product;
};

// Convex combination of pure product states; weights sum to 1 within 1e-10.
struct SeparableDecomposition {
    SeparableDecomposition(int n, std::vector<SeparableTerm> ts);

    int n_qubits;
    std::vector<SeparableTerm> terms;
};

struct MixedFactorTerm {
    double weight;                          // > 0
    std::vector<Eigen::Matrix2cd> factors;  // one single-qubit density matrix per qubit
};

// Convex combination of tensor products of single-qubit density operators.
// Each factor must be Hermitian (1e-10), unit trace (1e-10) and have
// eigenvalues >= -1e-8.
struct MixedSeparableInput {
    MixedSeparableInput(int n, std::vector<MixedFactorTerm> ts);

    int n_qubits;
    std::vector<MixedFactorTerm> terms;
};

// Per-term deterministic response table: x_values[k-1][i] = Tr(rho_i^(k) * sigma_x)
// and likewise for y; all entries lie in [-1, 1].
struct LhvTable {
    int n_qubits = 0;
    std::vector<double> weights;
    std::vector<std::vector<double>> x_values;
    std::vector<std::vector<double>> y_values;
};

struct OptimizerConfig {
    int restarts = 64;
    int max_iterations = 500;  // coordinate sweeps per restart
    double step_tolerance = 1e-10;
    double value_tolerance = 1e-9;
    std::uint64_t rng_seed = 0;
};

enum class OptimTarget { Plus, Minus, Sum };

struct OptimizeResult {
    double value;
    ProductState witness;
    int best_restart;
};

// prod_k 2*conj(alpha_k)*beta_k. Its real part equals the Plus expectation
// of the corresponding product state and its imaginary part the Minus one;
// the modulus never exceeds 1 (each factor has modulus 2|alpha||beta| <= 1).
cdouble product_bell_value(const ProductState& p);

// Convex combination of the per-term values: (sum_I r_I Re, sum_I r_I Im).
// Enforces the separable bounds on the result (violation -> check_error).
std::pair<double, double> separable_bell_values(const SeparableDecomposition& d);

// Eigendecomposes every single-qubit factor and expands the products,
// yielding an equivalent convex combination of pure product states. Branches
// whose accumulated weight falls below 1e-16 are pruned and final terms
// below 1e-14 dropped; weights are renormalized only when the dropped mass
// exceeds 1e-12.
SeparableDecomposition refine_to_pure(const MixedSeparableInput& m);

// Deterministic multi-start coordinate ascent over the 2N Bloch angles,
// maximizing Re, Im, or |Re|+|Im| of product_bell_value. Ties between
// restarts resolve to the lowest restart index.
OptimizeResult maximize_over_separable(int n_qubits, OptimTarget target,
                                       const OptimizerConfig& cfg = {});

LhvTable build_lhv_table(const MixedSeparableInput& m);

// Max over all 2^N x/y setting strings of |Tr(rho A(a)) - sum_i r_i prod_k A^(k)(a_k,i)|,
// the two sides computed independently (dense assembled state vs. response
// table). Refused above N = 10.
double verify_lhv_representation(const MixedSeparableInput& m);

// Flat simplex weights, uniform Bloch-sphere qubits; reproducible per seed.
SeparableDecomposition random_separable(int n_qubits, int num_terms, std::uint64_t rng_seed);

// Dense density matrices of the decompositions (refused above the dense cap).
DensityOperator assemble_density(const SeparableDecomposition& d);
DensityOperator assemble_density(const MixedSeparableInput& m);

}  // namespace bellgap
