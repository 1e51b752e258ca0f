#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bellgap/states.hpp"

namespace bellgap {

// The two N-qubit Bell operators: with s± = sigma_x ± i*sigma_y per site,
//   Plus  = (tensor(s+) + tensor(s-)) / 2
//   Minus = (tensor(s+) - tensor(s-)) / (2i).
// Both are Hermitian and couple only |up...up> and |down...down>.
enum class BellKind { Plus, Minus };

// Measurement-axis choice per qubit: a string over {x, y}, axes[k-1] for
// qubit k.
struct PauliSetting {
    explicit PauliSetting(std::string a);

    int n_qubits() const { return static_cast<int>(axes.size()); }

    std::string axes;
};

struct BellTerm {
    std::string setting;  // {x,y}^N
    double coeff;         // ±1
};

// Real linear combination of x/y tensor monomials. For Plus every setting
// has an even number of y's, for Minus an odd number; 2^(N-1) terms.
struct BellExpansion {
    int n_qubits;
    BellKind kind;
    std::vector<BellTerm> terms;
};

// Two-matrix-element form: the only nonzero entries sit at (0, 2^N-1) and
// (2^N-1, 0) with magnitude 2^(N-1). This makes expectation values O(1) in
// the amplitudes regardless of N.
struct SparseBell {
    int n_qubits;
    BellKind kind;

    double weight() const;          // 2^(N-1)
    cdouble corner_upper() const;   // entry (0, 2^N-1)
    cdouble corner_lower() const;   // entry (2^N-1, 0)
    Eigen::MatrixXcd to_dense() const;  // refused above the dense cap
};

SparseBell build_sparse(int n_qubits, BellKind kind);

// Expansion of the operator in x/y monomials: coefficient (-1)^(n_y/2) for
// Plus (n_y even) and (-1)^((n_y-1)/2) for Minus (n_y odd), where n_y counts
// y's in the setting. Validated against the dense forms in the test suite
// rather than trusted.
BellExpansion expand_monomials(int n_qubits, BellKind kind);

// sum_terms c(a) * tensor_k sigma_{a_k}, dense. Refused above the dense cap.
Eigen::MatrixXcd dense_from_expansion(const BellExpansion& expansion);

// <psi|B|psi> through the two-entry structure:
//   Plus  -> 2^N * Re(conj(psi_0) * psi_{2^N-1})
//   Minus -> 2^N * Im(conj(psi_0) * psi_{2^N-1}).
double bell_expectation_pure(const PureState& state, BellKind kind);

// Tr(rho B) through the same structure: 2^N * Re or Im of rho(2^N-1, 0).
double bell_expectation_mixed(const DensityOperator& rho, BellKind kind);

// Correlation Tr(rho * tensor_k sigma_{a_k}) for one setting string. Both
// sigma_x and sigma_y are antidiagonal, so the monomial has one nonzero per
// row and the trace costs O(2^N * N).
double setting_correlation(const DensityOperator& rho, const PauliSetting& setting);

// Operator norm, exact from the two-entry structure: 2^(N-1).
double operator_norm(int n_qubits, BellKind kind);

// Confirmation path: largest |eigenvalue| of the dense matrix built from the
// monomial expansion. Refused above the dense cap.
double operator_norm_dense(int n_qubits, BellKind kind);

}  // namespace bellgap
