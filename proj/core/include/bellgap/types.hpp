#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace bellgap {

using cdouble = std::complex<double>;

// Dense 2^N x 2^N matrices are refused above this qubit count.
inline constexpr int kMaxDenseQubits = 12;

// State vectors (2^N amplitudes) are refused above this qubit count.
inline constexpr int kMaxStateQubits = 24;

// Default cap on exhaustive enumeration of deterministic local strategies
// (4^N assignments).
inline constexpr int kDefaultEnumerationCap = 13;

// The request exceeds a dense-storage or enumeration capacity limit.
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A certified numerical identity failed to hold; indicates a defect rather
// than bad user input.
class check_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(cdouble z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Bit of qubit k (1-based) in basis index b. Qubit 1 is the most significant
// bit; bit value 0 is the sigma_z +1 eigenstate (up), 1 the -1 eigenstate.
inline int qubit_bit(std::uint64_t b, int k, int n_qubits) {
    return static_cast<int>((b >> (n_qubits - k)) & 1ULL);
}

}  // namespace bellgap
