#include "bellgap/schmidt.hpp"

#include <algorithm>
#include <string>

namespace bellgap {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

Bipartition::Bipartition(int n, std::vector<int> side_one, std::vector<int> side_two)
    : n_qubits(n), side1(sorted(std::move(side_one))), side2(sorted(std::move(side_two))) {
    require(n_qubits >= 2, "bipartition needs at least two qubits");
    require(!side1.empty() && !side2.empty(), "both sides of the cut must be non-empty");
    std::vector<bool> seen(static_cast<size_t>(n_qubits) + 1, false);
    for (const auto& side : {side1, side2}) {
        for (int q : side) {
            require(q >= 1 && q <= n_qubits, "cut names an unknown qubit");
            require(!seen[static_cast<size_t>(q)], "cut names a qubit twice");
            seen[static_cast<size_t>(q)] = true;
        }
    }
    require(static_cast<int>(side1.size() + side2.size()) == n_qubits,
            "cut must cover every qubit");
}

Bipartition Bipartition::from_side_one(int n_qubits, std::vector<int> side_one) {
    std::vector<bool> in_one(static_cast<size_t>(n_qubits) + 1, false);
    for (int q : side_one) {
        if (q >= 1 && q <= n_qubits) in_one[static_cast<size_t>(q)] = true;
    }
    std::vector<int> side_two;
    for (int q = 1; q <= n_qubits; ++q)
        if (!in_one[static_cast<size_t>(q)]) side_two.push_back(q);
    return Bipartition(n_qubits, std::move(side_one), std::move(side_two));
}

SchmidtResult schmidt_decompose(const PureState& state, const Bipartition& cut,
                                double rank_tolerance) {
    require(cut.n_qubits == state.n_qubits(), "cut does not match the state size");
    const int n = state.n_qubits();
    const Eigen::Index rows = Eigen::Index{1} << cut.side1.size();
    const Eigen::Index cols = Eigen::Index{1} << cut.side2.size();

    Eigen::MatrixXcd a(rows, cols);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        Eigen::Index r = 0;
        for (int q : cut.side1) r = (r << 1) | qubit_bit(b, q, n);
        Eigen::Index c = 0;
        for (int q : cut.side2) c = (c << 1) | qubit_bit(b, q, n);
        a(r, c) = state.amplitude(static_cast<Eigen::Index>(b));
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    SchmidtResult result;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double p = sv(i) * sv(i);
        if (p > rank_tolerance) ++result.rank;
        if (p > rank_tolerance) result.coefficients.push_back(p);
    }
    const Eigen::Index kept = result.rank;
    result.left_vectors = svd.matrixU().leftCols(kept);
    // Right vectors conjugated so the state is sum_i sqrt(p_i) u_i (x) v_i.
    result.right_vectors = svd.matrixV().leftCols(kept).conjugate();
    return result;
}

}  // namespace bellgap
