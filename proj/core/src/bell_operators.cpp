#include "bellgap/bell_operators.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace bellgap {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

void check_dense_cap(int n_qubits) {
    if (n_qubits > kMaxDenseQubits)
        throw capacity_error("dense operators capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
}

// Value of the single nonzero entry in row r of tensor_k sigma_{a_k}; the
// column is the bitwise complement of r.
cdouble antidiagonal_entry(const std::string& axes, std::uint64_t row, int n) {
    cdouble v(1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        if (axes[static_cast<size_t>(k - 1)] == 'y')
            v *= qubit_bit(row, k, n) == 0 ? cdouble(0.0, -1.0) : cdouble(0.0, 1.0);
    }
    return v;
}

}  // namespace

PauliSetting::PauliSetting(std::string a) : axes(std::move(a)) {
    require(!axes.empty(), "setting must cover at least one qubit");
    for (char c : axes) require(c == 'x' || c == 'y', "setting axes must be 'x' or 'y'");
}

double SparseBell::weight() const { return std::ldexp(1.0, n_qubits - 1); }

cdouble SparseBell::corner_upper() const {
    return kind == BellKind::Plus ? cdouble(weight(), 0.0) : cdouble(0.0, -weight());
}

cdouble SparseBell::corner_lower() const {
    return kind == BellKind::Plus ? cdouble(weight(), 0.0) : cdouble(0.0, weight());
}

Eigen::MatrixXcd SparseBell::to_dense() const {
    check_dense_cap(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(0, dim - 1) = corner_upper();
    m(dim - 1, 0) = corner_lower();
    return m;
}

SparseBell build_sparse(int n_qubits, BellKind kind) {
    require(n_qubits >= 1, "operator needs at least one qubit");
    return SparseBell{n_qubits, kind};
}

BellExpansion expand_monomials(int n_qubits, BellKind kind) {
    require(n_qubits >= 1, "operator needs at least one qubit");
    BellExpansion expansion{n_qubits, kind, {}};
    expansion.terms.reserve(std::size_t{1} << (n_qubits - 1));
    const bool want_odd = kind == BellKind::Minus;
    // Settings indexed by bit mask: bit of qubit k set -> axis y.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_qubits); ++mask) {
        const int n_y = std::popcount(mask);
        if ((n_y % 2 == 1) != want_odd) continue;
        std::string axes(static_cast<size_t>(n_qubits), 'x');
        for (int k = 1; k <= n_qubits; ++k)
            if (qubit_bit(mask, k, n_qubits)) axes[static_cast<size_t>(k - 1)] = 'y';
        const int exponent = want_odd ? (n_y - 1) / 2 : n_y / 2;
        expansion.terms.push_back({std::move(axes), exponent % 2 == 0 ? 1.0 : -1.0});
    }
    return expansion;
}

Eigen::MatrixXcd dense_from_expansion(const BellExpansion& expansion) {
    require(expansion.n_qubits >= 1, "operator needs at least one qubit");
    check_dense_cap(expansion.n_qubits);
    const int n = expansion.n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const std::uint64_t flip = (std::uint64_t{1} << n) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const BellTerm& term : expansion.terms) {
        require(static_cast<int>(term.setting.size()) == n,
                "term setting length must match the qubit count");
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r ^ flip)) +=
                term.coeff * antidiagonal_entry(term.setting, r, n);
        }
    }
    return m;
}

double bell_expectation_pure(const PureState& state, BellKind kind) {
    const cdouble z =
        std::conj(state.amplitude(0)) * state.amplitude(state.dim() - 1);
    const double scale = std::ldexp(1.0, state.n_qubits());
    return scale * (kind == BellKind::Plus ? z.real() : z.imag());
}

double bell_expectation_mixed(const DensityOperator& rho, BellKind kind) {
    const cdouble z = rho.matrix()(rho.dim() - 1, 0);
    const double scale = std::ldexp(1.0, rho.n_qubits());
    return scale * (kind == BellKind::Plus ? z.real() : z.imag());
}

double setting_correlation(const DensityOperator& rho, const PauliSetting& setting) {
    const int n = rho.n_qubits();
    require(setting.n_qubits() == n, "setting does not match the state size");
    const std::uint64_t flip = (std::uint64_t{1} << n) - 1;
    cdouble trace(0.0, 0.0);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        trace += rho.matrix()(static_cast<Eigen::Index>(c ^ flip),
                              static_cast<Eigen::Index>(c)) *
                 antidiagonal_entry(setting.axes, c, n);
    }
    if (std::abs(trace.imag()) > 1e-8)
        throw check_error("correlation of a Hermitian monomial came out complex");
    return trace.real();
}

double operator_norm(int n_qubits, BellKind kind) {
    (void)kind;  // both kinds share the spectrum {+-2^(N-1), 0}
    require(n_qubits >= 1, "operator needs at least one qubit");
    return std::ldexp(1.0, n_qubits - 1);
}

double operator_norm_dense(int n_qubits, BellKind kind) {
    check_dense_cap(n_qubits);
    const Eigen::MatrixXcd m = dense_from_expansion(expand_monomials(n_qubits, kind));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace bellgap
