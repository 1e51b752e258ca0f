#include "bellgap/states.hpp"

#include <cmath>
#include <string>

namespace bellgap {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace

QubitPure::QubitPure(cdouble a, cdouble b) : alpha(a), beta(b) {
    require(is_finite(a) && is_finite(b), "qubit amplitudes must be finite");
    const double norm2 = std::norm(a) + std::norm(b);
    require(std::abs(norm2 - 1.0) <= 1e-12,
            "qubit state must be normalized within 1e-12");
}

QubitPure bloch_to_qubit(double theta, double phi) {
    require(std::isfinite(theta) && std::isfinite(phi), "Bloch angles must be finite");
    const double half = 0.5 * theta;
    return QubitPure(cdouble(std::cos(half), 0.0),
                     std::polar(std::sin(half), phi));
}

ProductState::ProductState(std::vector<QubitPure> qs) : qubits(std::move(qs)) {
    require(!qubits.empty(), "product state needs at least one qubit");
}

PureState::PureState(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    require(n_qubits_ >= 1, "state needs at least one qubit");
    if (n_qubits_ > kMaxStateQubits)
        throw capacity_error("state vectors capped at " +
                             std::to_string(kMaxStateQubits) + " qubits");
    require(amplitudes_.size() == (Eigen::Index{1} << n_qubits_),
            "amplitude count must be 2^N");
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i)
        require(is_finite(amplitudes_(i)), "amplitudes must be finite");
    require(std::abs(amplitudes_.squaredNorm() - 1.0) <= 1e-10,
            "state must be normalized within 1e-10");
}

DensityOperator DensityOperator::from_matrix(int n_qubits, Eigen::MatrixXcd m) {
    require(n_qubits >= 1, "density operator needs at least one qubit");
    if (n_qubits > kMaxDenseQubits)
        throw capacity_error("dense operators capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    require(m.rows() == dim && m.cols() == dim, "matrix must be 2^N x 2^N");
    require(m.allFinite(), "matrix entries must be finite");
    require((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-10,
            "density operator must be Hermitian within 1e-10");
    require(std::abs(m.trace() - cdouble(1.0, 0.0)) <= 1e-10,
            "density operator must have unit trace within 1e-10");
    if (dim <= 1024) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        require(solver.eigenvalues().minCoeff() >= -1e-8,
                "density operator must be positive semidefinite (eigenvalues >= -1e-8)");
    }
    return DensityOperator(n_qubits, std::move(m));
}

PureState tensor_product(const ProductState& parts) {
    const int n = parts.n_qubits();
    if (n > kMaxStateQubits)
        throw capacity_error("tensor product capped at " +
                             std::to_string(kMaxStateQubits) + " qubits");
    Eigen::VectorXcd amps(1);
    amps(0) = cdouble(1.0, 0.0);
    for (const QubitPure& q : parts.qubits) {
        Eigen::VectorXcd next(2 * amps.size());
        for (Eigen::Index i = 0; i < amps.size(); ++i) {
            next(2 * i) = amps(i) * q.alpha;
            next(2 * i + 1) = amps(i) * q.beta;
        }
        amps.swap(next);
    }
    return PureState(n, std::move(amps));
}

DensityOperator density_from_pure(const PureState& state) {
    if (state.n_qubits() > kMaxDenseQubits)
        throw capacity_error("dense operators capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    Eigen::MatrixXcd m = state.amplitudes() * state.amplitudes().adjoint();
    return DensityOperator(state.n_qubits(), std::move(m));
}

double expectation(const DensityOperator& rho, const Eigen::MatrixXcd& observable) {
    if (observable.rows() != rho.dim() || observable.cols() != rho.dim())
        throw std::invalid_argument("observable dimension mismatch");
    if ((observable - observable.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("observable must be Hermitian within 1e-8");
    // Tr(rho * O) = sum_{ij} rho(i,j) O(j,i)
    const cdouble trace = (rho.matrix().transpose().cwiseProduct(observable)).sum();
    if (std::abs(trace.imag()) > 1e-8)
        throw check_error("expectation of a Hermitian observable came out complex");
    return trace.real();
}

}  // namespace bellgap
