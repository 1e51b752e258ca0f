#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bellgap/types.hpp"

namespace bellgap {

// Basis and index conventions used throughout the library:
//   * qubit labels are 1-based and qubit 1 occupies the most significant bit;
//   * bit value 0 encodes the sigma_z +1 eigenstate (up), 1 the -1 eigenstate;
//   * index 0 is |up...up>, index 2^N-1 is |down...down>;
//   * Pauli conventions: sigma_x = [[0,1],[1,0]], sigma_y = [[0,-i],[i,0]],
//     sigma_z = diag(1,-1).

// Single-qubit pure state; amplitudes (alpha, beta) of up/down.
struct QubitPure {
    QubitPure(cdouble a, cdouble b);  // requires |a|^2 + |b|^2 = 1 within 1e-12

    cdouble alpha;
    cdouble beta;
};

// (cos(theta/2), e^{i phi} sin(theta/2)). Angles must be finite.
QubitPure bloch_to_qubit(double theta, double phi);

// Per-qubit pure states, qubit 1 first; represents their tensor product.
struct ProductState {
    explicit ProductState(std::vector<QubitPure> qs);

    int n_qubits() const { return static_cast<int>(qubits.size()); }

    std::vector<QubitPure> qubits;
};

// Normalized 2^N-amplitude state vector over the computational basis.
class PureState {
  public:
    PureState(int n_qubits, Eigen::VectorXcd amplitudes);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    cdouble amplitude(Eigen::Index i) const { return amplitudes_(i); }

  private:
    int n_qubits_;
    Eigen::VectorXcd amplitudes_;
};

// Hermitian, unit-trace, positive-semidefinite 2^N x 2^N matrix.
class DensityOperator {
  public:
    // Validates hermiticity (1e-10), trace (1e-10) and, up to dimension 1024,
    // eigenvalue positivity (>= -1e-8).
    static DensityOperator from_matrix(int n_qubits, Eigen::MatrixXcd m);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

  private:
    DensityOperator(int n_qubits, Eigen::MatrixXcd m)
        : n_qubits_(n_qubits), matrix_(std::move(m)) {}

    // Builders whose output is positive semidefinite by construction.
    friend DensityOperator density_from_pure(const PureState& state);
    friend DensityOperator assemble_density(const struct SeparableDecomposition& d);
    friend DensityOperator assemble_density(const struct MixedSeparableInput& m);

    int n_qubits_;
    Eigen::MatrixXcd matrix_;
};

// Amplitude at index b is the product over qubits of (alpha if bit 0, beta
// if bit 1).
PureState tensor_product(const ProductState& parts);

// |psi><psi|; refused above the dense cap.
DensityOperator density_from_pure(const PureState& state);

// Re(Tr(rho * observable)) for a Hermitian observable of matching dimension.
// The imaginary part of the trace must vanish within 1e-8.
double expectation(const DensityOperator& rho, const Eigen::MatrixXcd& observable);

}  // namespace bellgap
