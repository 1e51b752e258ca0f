#include "bellgap/separability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "bellgap/bell_operators.hpp"
#include "bellgap/rng.hpp"

namespace bellgap {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

void validate_factor(const Eigen::Matrix2cd& f) {
    require(f.allFinite(), "factor entries must be finite");
    require((f - f.adjoint()).cwiseAbs().maxCoeff() <= 1e-10,
            "factor must be Hermitian within 1e-10");
    require(std::abs(f.trace() - cdouble(1.0, 0.0)) <= 1e-10,
            "factor must have unit trace within 1e-10");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(0.5 * (f + f.adjoint()),
                                                           Eigen::EigenvaluesOnly);
    require(solver.eigenvalues().minCoeff() >= -1e-8,
            "factor must be positive semidefinite (eigenvalues >= -1e-8)");
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::Matrix2cd& b) {
    Eigen::MatrixXcd out(a.rows() * 2, a.cols() * 2);
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    return out;
}

double target_value(OptimTarget target, cdouble z) {
    switch (target) {
        case OptimTarget::Plus:
            return z.real();
        case OptimTarget::Minus:
            return z.imag();
        case OptimTarget::Sum:
            return std::abs(z.real()) + std::abs(z.imag());
    }
    return 0.0;
}

double target_bound(OptimTarget target) {
    return target == OptimTarget::Sum ? kSeparableBoundSum : kSeparableBoundIndividual;
}

// Per-qubit contribution to product_bell_value in Bloch angles:
// 2*conj(alpha)*beta = sin(theta) e^{i phi}.
cdouble bloch_factor(double theta, double phi) {
    return std::polar(std::max(0.0, std::sin(theta)), phi);
}

// Maximize a 1-d slice: coarse scan over an even grid, then golden-section
// refinement inside the bracketing interval.
double line_maximize(const std::function<double(double)>& f, double lo, double hi,
                     double step_tolerance, double* best_value) {
    constexpr int kGridPoints = 33;
    double best_x = lo;
    double best_f = f(lo);
    const double step = (hi - lo) / (kGridPoints - 1);
    for (int i = 1; i < kGridPoints; ++i) {
        const double x = lo + step * i;
        const double v = f(x);
        if (v > best_f) {
            best_f = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_golden * (b - a);
    double x2 = a + inv_golden * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > step_tolerance) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_golden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_golden * (b - a);
            f2 = f(x2);
        }
    }
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm >= best_f) {
        best_f = fm;
        best_x = mid;
    }
    if (best_value) *best_value = best_f;
    return best_x;
}

}  // namespace

SeparableDecomposition::SeparableDecomposition(int n, std::vector<SeparableTerm> ts)
    : n_qubits(n), terms(std::move(ts)) {
    require(n_qubits >= 1, "decomposition needs at least one qubit");
    require(!terms.empty(), "decomposition needs at least one term");
    double total = 0.0;
    for (const SeparableTerm& term : terms) {
        require(std::isfinite(term.weight) && term.weight > 0.0,
                "term weights must be positive");
        require(term.product.n_qubits() == n_qubits,
                "every product must cover all qubits");
        total += term.weight;
    }
    require(std::abs(total - 1.0) <= 1e-10, "term weights must sum to 1 within 1e-10");
}

MixedSeparableInput::MixedSeparableInput(int n, std::vector<MixedFactorTerm> ts)
    : n_qubits(n), terms(std::move(ts)) {
    require(n_qubits >= 1, "input needs at least one qubit");
    require(!terms.empty(), "input needs at least one term");
    double total = 0.0;
    for (const MixedFactorTerm& term : terms) {
        require(std::isfinite(term.weight) && term.weight > 0.0,
                "term weights must be positive");
        require(static_cast<int>(term.factors.size()) == n_qubits,
                "every term must carry one factor per qubit");
        for (const Eigen::Matrix2cd& f : term.factors) validate_factor(f);
        total += term.weight;
    }
    require(std::abs(total - 1.0) <= 1e-10, "term weights must sum to 1 within 1e-10");
}

cdouble product_bell_value(const ProductState& p) {
    cdouble z(1.0, 0.0);
    for (const QubitPure& q : p.qubits) z *= 2.0 * std::conj(q.alpha) * q.beta;
    if (std::abs(z) > 1.0 + 1e-9)
        throw check_error("product Bell value exceeded modulus 1");
    return z;
}

std::pair<double, double> separable_bell_values(const SeparableDecomposition& d) {
    double plus = 0.0;
    double minus = 0.0;
    for (const SeparableTerm& term : d.terms) {
        const cdouble z = product_bell_value(term.product);
        plus += term.weight * z.real();
        minus += term.weight * z.imag();
    }
    if (std::abs(plus) > kSeparableBoundIndividual + 1e-9 ||
        std::abs(minus) > kSeparableBoundIndividual + 1e-9 ||
        std::abs(plus) + std::abs(minus) > kSeparableBoundSum + 1e-9)
        throw check_error("separable state exceeded a separability bound");
    return {plus, minus};
}

SeparableDecomposition refine_to_pure(const MixedSeparableInput& m) {
    const int n = m.n_qubits;
    std::vector<SeparableTerm> out;
    for (const MixedFactorTerm& term : m.terms) {
        std::vector<std::vector<std::pair<double, QubitPure>>> branches(
            static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(
                0.5 * (term.factors[static_cast<size_t>(k)] +
                       term.factors[static_cast<size_t>(k)].adjoint()));
            for (int s = 0; s < 2; ++s) {
                const double lambda = std::max(0.0, solver.eigenvalues()(s));
                if (lambda <= 0.0) continue;
                const Eigen::Vector2cd v = solver.eigenvectors().col(s);
                branches[static_cast<size_t>(k)].push_back(
                    {lambda, QubitPure(v(0), v(1))});
            }
        }
        std::vector<QubitPure> qubits;
        qubits.reserve(static_cast<size_t>(n));
        const std::function<void(int, double)> expand = [&](int k, double weight) {
            if (weight < 1e-16) return;
            if (k == n) {
                if (weight >= 1e-14) out.push_back({weight, ProductState(qubits)});
                return;
            }
            for (const auto& [lambda, q] : branches[static_cast<size_t>(k)]) {
                qubits.push_back(q);
                expand(k + 1, weight * lambda);
                qubits.pop_back();
            }
        };
        expand(0, term.weight);
    }
    double total = 0.0;
    for (const SeparableTerm& term : out) total += term.weight;
    require(total > 0.0, "refinement dropped all terms");
    if (std::abs(total - 1.0) > 1e-12)
        for (SeparableTerm& term : out) term.weight /= total;
    return SeparableDecomposition(n, std::move(out));
}

OptimizeResult maximize_over_separable(int n_qubits, OptimTarget target,
                                       const OptimizerConfig& cfg) {
    require(n_qubits >= 1, "optimization needs at least one qubit");
    require(cfg.restarts >= 1 && cfg.max_iterations >= 1, "counts must be positive");
    require(cfg.step_tolerance > 0.0 && cfg.value_tolerance > 0.0,
            "tolerances must be positive");
    constexpr double kPi = 3.14159265358979323846;
    const size_t nq = static_cast<size_t>(n_qubits);

    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<double> best_theta, best_phi;
    int best_restart = -1;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        std::seed_seq seq{cfg.rng_seed, static_cast<std::uint64_t>(restart)};
        std::vector<std::uint32_t> seed_words(2);
        seq.generate(seed_words.begin(), seed_words.end());
        Rng rng((static_cast<std::uint64_t>(seed_words[0]) << 32) | seed_words[1]);

        std::vector<double> theta(nq), phi(nq);
        std::vector<cdouble> factors(nq);
        for (size_t k = 0; k < nq; ++k) {
            theta[k] = std::acos(rng.uniform(-1.0, 1.0));
            phi[k] = rng.uniform(0.0, 2.0 * kPi);
            factors[k] = bloch_factor(theta[k], phi[k]);
        }
        const auto rest_product = [&](size_t skip) {
            cdouble z(1.0, 0.0);
            for (size_t j = 0; j < nq; ++j)
                if (j != skip) z *= factors[j];
            return z;
        };
        const auto current_value = [&] {
            cdouble z(1.0, 0.0);
            for (const cdouble& f : factors) z *= f;
            return target_value(target, z);
        };

        double value = current_value();
        for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
            const double before = value;
            // Phases first: they set the sign of the objective, after which
            // the amplitude coordinates cannot collapse onto sin(theta) = 0.
            for (size_t k = 0; k < nq; ++k) {
                const cdouble rest = rest_product(k);
                const double t = theta[k];
                phi[k] = line_maximize(
                    [&](double v) {
                        return target_value(target, rest * bloch_factor(t, v));
                    },
                    0.0, 2.0 * kPi, cfg.step_tolerance, nullptr);
                factors[k] = bloch_factor(theta[k], phi[k]);
            }
            for (size_t k = 0; k < nq; ++k) {
                const cdouble rest = rest_product(k);
                const double p = phi[k];
                theta[k] = line_maximize(
                    [&](double v) {
                        return target_value(target, rest * bloch_factor(v, p));
                    },
                    0.0, kPi, cfg.step_tolerance, nullptr);
                factors[k] = bloch_factor(theta[k], phi[k]);
            }
            value = current_value();
            if (value - before < cfg.value_tolerance) break;
        }
        if (value > best_value) {
            best_value = value;
            best_theta = theta;
            best_phi = phi;
            best_restart = restart;
        }
    }

    std::vector<QubitPure> qubits;
    qubits.reserve(nq);
    for (size_t k = 0; k < nq; ++k)
        qubits.push_back(bloch_to_qubit(best_theta[k], best_phi[k]));
    ProductState witness(std::move(qubits));
    const double value = target_value(target, product_bell_value(witness));
    if (value > target_bound(target) + 1e-9)
        throw check_error("optimizer exceeded a separability bound");
    return OptimizeResult{value, std::move(witness), best_restart};
}

LhvTable build_lhv_table(const MixedSeparableInput& m) {
    LhvTable table;
    table.n_qubits = m.n_qubits;
    table.x_values.resize(static_cast<size_t>(m.n_qubits));
    table.y_values.resize(static_cast<size_t>(m.n_qubits));
    for (const MixedFactorTerm& term : m.terms) {
        table.weights.push_back(term.weight);
        for (int k = 0; k < m.n_qubits; ++k) {
            const cdouble lower = term.factors[static_cast<size_t>(k)](1, 0);
            // Tr(rho sigma_x) = 2 Re rho_10, Tr(rho sigma_y) = 2 Im rho_10.
            double x = 2.0 * lower.real();
            double y = 2.0 * lower.imag();
            if (std::abs(x) > 1.0 + 1e-9 || std::abs(y) > 1.0 + 1e-9)
                throw check_error("response value left the eigenvalue range");
            x = std::clamp(x, -1.0, 1.0);
            y = std::clamp(y, -1.0, 1.0);
            table.x_values[static_cast<size_t>(k)].push_back(x);
            table.y_values[static_cast<size_t>(k)].push_back(y);
        }
    }
    return table;
}

double verify_lhv_representation(const MixedSeparableInput& m) {
    const int n = m.n_qubits;
    if (n > 10)
        throw capacity_error("representation check capped at 10 qubits (dense side)");
    const DensityOperator rho = assemble_density(m);
    const LhvTable table = build_lhv_table(m);

    double residual = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::string axes(static_cast<size_t>(n), 'x');
        for (int k = 1; k <= n; ++k)
            if (qubit_bit(mask, k, n)) axes[static_cast<size_t>(k - 1)] = 'y';
        const double lhs = setting_correlation(rho, PauliSetting(axes));
        double rhs = 0.0;
        for (size_t i = 0; i < table.weights.size(); ++i) {
            double product = 1.0;
            for (int k = 0; k < n; ++k)
                product *= axes[static_cast<size_t>(k)] == 'x'
                               ? table.x_values[static_cast<size_t>(k)][i]
                               : table.y_values[static_cast<size_t>(k)][i];
            rhs += table.weights[i] * product;
        }
        residual = std::max(residual, std::abs(lhs - rhs));
    }
    return residual;
}

SeparableDecomposition random_separable(int n_qubits, int num_terms,
                                        std::uint64_t rng_seed) {
    require(n_qubits >= 1, "decomposition needs at least one qubit");
    require(num_terms >= 1, "decomposition needs at least one term");
    constexpr double kPi = 3.14159265358979323846;
    Rng rng(rng_seed);

    // Flat simplex sample: normalized exponentials.
    std::vector<double> weights(static_cast<size_t>(num_terms));
    double total = 0.0;
    for (double& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    std::vector<SeparableTerm> terms;
    terms.reserve(weights.size());
    for (double w : weights) {
        std::vector<QubitPure> qubits;
        qubits.reserve(static_cast<size_t>(n_qubits));
        for (int k = 0; k < n_qubits; ++k) {
            const double theta = std::acos(rng.uniform(-1.0, 1.0));
            const double phi = rng.uniform(0.0, 2.0 * kPi);
            qubits.push_back(bloch_to_qubit(theta, phi));
        }
        terms.push_back({w / total, ProductState(std::move(qubits))});
    }
    return SeparableDecomposition(n_qubits, std::move(terms));
}

DensityOperator assemble_density(const SeparableDecomposition& d) {
    if (d.n_qubits > kMaxDenseQubits)
        throw capacity_error("dense operators capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << d.n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const SeparableTerm& term : d.terms) {
        const PureState state = tensor_product(term.product);
        m.noalias() += term.weight * (state.amplitudes() * state.amplitudes().adjoint());
    }
    return DensityOperator(d.n_qubits, std::move(m));
}

DensityOperator assemble_density(const MixedSeparableInput& input) {
    if (input.n_qubits > kMaxDenseQubits)
        throw capacity_error("dense operators capped at " +
                             std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << input.n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const MixedFactorTerm& term : input.terms) {
        Eigen::MatrixXcd product = Eigen::MatrixXcd::Ones(1, 1);
        for (const Eigen::Matrix2cd& f : term.factors) product = kron(product, f);
        m.noalias() += term.weight * product;
    }
    return DensityOperator(input.n_qubits, std::move(m));
}

}  // namespace bellgap
