#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bellgap/states.hpp"

namespace bellgap {

// Bipartition of the qubits 1..N into two non-empty sides. Sides are stored
// sorted ascending; every qubit must appear exactly once.
struct Bipartition {
    Bipartition(int n_qubits, std::vector<int> side_one, std::vector<int> side_two);

    // side_two = complement of side_one.
    static Bipartition from_side_one(int n_qubits, std::vector<int> side_one);

    int n_qubits;
    std::vector<int> side1;
    std::vector<int> side2;
};

struct SchmidtResult {
    // Squared singular values above the rank tolerance, descending.
    std::vector<double> coefficients;
    int rank = 0;
    // Orthonormal columns; the state reconstructs as
    // sum_i sqrt(p_i) * left_col_i (x) right_col_i.
    Eigen::MatrixXcd left_vectors;
    Eigen::MatrixXcd right_vectors;
};

// Biorthogonal decomposition of the state across the cut via SVD of the
// reshaped amplitude matrix. rank counts coefficients > rank_tolerance.
SchmidtResult schmidt_decompose(const PureState& state, const Bipartition& cut,
                                double rank_tolerance = 1e-10);

}  // namespace bellgap
