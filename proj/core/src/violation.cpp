#include "bellgap/violation.hpp"

#include <cmath>

#include "bellgap/bell_operators.hpp"
#include "bellgap/separability.hpp"

namespace bellgap {

PureState ghz_state(const GhzSpec& ghz) {
    if (ghz.n_qubits < 2)
        throw std::invalid_argument("GHZ state needs at least two qubits");
    if (!std::isfinite(ghz.theta))
        throw std::invalid_argument("theta must be finite");
    const Eigen::Index dim = Eigen::Index{1} << ghz.n_qubits;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps(0) = cdouble(std::numbers::sqrt2 / 2.0, 0.0);
    amps(dim - 1) = std::polar(std::numbers::sqrt2 / 2.0, ghz.theta);
    return PureState(ghz.n_qubits, std::move(amps));
}

std::pair<double, double> ghz_expectations(const GhzSpec& ghz) {
    const PureState state = ghz_state(ghz);
    const double plus = bell_expectation_pure(state, BellKind::Plus);
    const double minus = bell_expectation_pure(state, BellKind::Minus);
    const double scale = std::ldexp(1.0, ghz.n_qubits - 1);
    // Closed form 2^(N-1)(cos, sin); the rounding allowance grows with the
    // scale since cos^2+sin^2 = 1 only holds to relative precision.
    const double tol = std::max(1e-9, scale * 1e-12);
    if (std::abs(plus - scale * std::cos(ghz.theta)) > tol ||
        std::abs(minus - scale * std::sin(ghz.theta)) > tol)
        throw check_error("GHZ expectations drifted from the closed form");
    return {plus, minus};
}

ViolationReport violation_report(const GhzSpec& ghz, const LhvBoundResult& lhv) {
    if (lhv.n_qubits != ghz.n_qubits)
        throw std::invalid_argument("bounds were computed for a different qubit count");
    ViolationReport report;
    report.n_qubits = ghz.n_qubits;
    report.theta = ghz.theta;
    const auto [plus, minus] = ghz_expectations(ghz);
    report.quantum_plus = plus;
    report.quantum_minus = minus;
    report.quantum_sum = std::abs(plus) + std::abs(minus);

    report.lhv_bound_individual = std::max(lhv.max_abs_plus, lhv.max_abs_minus);
    report.lhv_bound_sum = lhv.max_sum;
    report.lhv_method = lhv.method;

    const double individual = std::max(std::abs(plus), std::abs(minus));
    report.ratio_vs_separable =
        std::max(individual / kSeparableBoundIndividual,
                 report.quantum_sum / kSeparableBoundSum);
    report.ratio_vs_lhv = ghz.n_qubits % 2 == 1
                              ? individual / report.lhv_bound_individual
                              : report.quantum_sum / report.lhv_bound_sum;
    report.maximality_flag =
        std::abs(individual - operator_norm(ghz.n_qubits, BellKind::Plus)) <= 1e-9;
    return report;
}

}  // namespace bellgap
