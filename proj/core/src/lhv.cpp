#include "bellgap/lhv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace bellgap {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

// Base-4 digit -> factor x + i*y; bit 0 flips x, bit 1 flips y.
constexpr std::array<cdouble, 4> kDigitFactors = {
    cdouble(1.0, 1.0), cdouble(-1.0, 1.0), cdouble(1.0, -1.0), cdouble(-1.0, -1.0)};

// Products over all digit strings of the given length, first digit most
// significant. With fix_first_digit the first digit is pinned to 0 (both
// signs +1), which quotients away the global-flip symmetry.
std::vector<cdouble> half_products(int length, bool fix_first_digit) {
    std::vector<cdouble> out{cdouble(1.0, 0.0)};
    for (int pos = 0; pos < length; ++pos) {
        const int digits = (pos == 0 && fix_first_digit) ? 1 : 4;
        std::vector<cdouble> next(out.size() * static_cast<size_t>(digits));
        for (size_t i = 0; i < out.size(); ++i)
            for (int d = 0; d < digits; ++d)
                next[i * static_cast<size_t>(digits) + static_cast<size_t>(d)] =
                    out[i] * kDigitFactors[static_cast<size_t>(d)];
        out.swap(next);
    }
    return out;
}

struct Extremum {
    double value = -1.0;
    std::uint64_t index = 0;
};

struct ScanResult {
    Extremum plus, minus, sum;
};

// All values are Gaussian integers represented exactly in doubles, so the
// comparisons below are exact and the scan order fixes which witness wins.
ScanResult scan_range(const std::vector<cdouble>& hi, const std::vector<cdouble>& lo,
                      size_t hi_begin, size_t hi_end, int lo_bits) {
    ScanResult r;
    for (size_t i = hi_begin; i < hi_end; ++i) {
        const cdouble h = hi[i];
        const std::uint64_t base = static_cast<std::uint64_t>(i) << lo_bits;
        for (size_t j = 0; j < lo.size(); ++j) {
            const cdouble z = h * lo[j];
            const double re = z.real();
            const double im = z.imag();
            const std::uint64_t idx = base | static_cast<std::uint64_t>(j);
            const double abs_re = std::abs(re);
            if (abs_re > r.plus.value) r.plus = {abs_re, idx};
            const double abs_im = std::abs(im);
            if (abs_im > r.minus.value) r.minus = {abs_im, idx};
            // The four sign-pair linear functionals over the polytope.
            const double s = std::max(std::max(re + im, re - im),
                                      std::max(-re + im, -re - im));
            if (s > r.sum.value) r.sum = {s, idx};
        }
    }
    return r;
}

void merge_in_order(ScanResult& into, const ScanResult& later) {
    if (later.plus.value > into.plus.value) into.plus = later.plus;
    if (later.minus.value > into.minus.value) into.minus = later.minus;
    if (later.sum.value > into.sum.value) into.sum = later.sum;
}

int resolve_threads(int requested) {
    int limit = static_cast<int>(std::thread::hardware_concurrency());
    if (limit < 1) limit = 1;
    if (const char* env = std::getenv("BELLGAP_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) limit = std::min(limit, v);
    }
    if (requested >= 1) limit = std::min(limit, requested);
    return limit;
}

}  // namespace

LhvAssignment assignment_from_index(int n_qubits, std::uint64_t index) {
    LhvAssignment a;
    a.x_signs.resize(static_cast<size_t>(n_qubits));
    a.y_signs.resize(static_cast<size_t>(n_qubits));
    for (int k = 1; k <= n_qubits; ++k) {
        const std::uint64_t digit = (index >> (2 * (n_qubits - k))) & 3ULL;
        a.x_signs[static_cast<size_t>(k - 1)] = (digit & 1ULL) ? -1 : 1;
        a.y_signs[static_cast<size_t>(k - 1)] = (digit & 2ULL) ? -1 : 1;
    }
    return a;
}

cdouble evaluate_assignment(const LhvAssignment& a) {
    require(!a.x_signs.empty() && a.x_signs.size() == a.y_signs.size(),
            "assignment needs matching x/y sign lists");
    cdouble product(1.0, 0.0);
    for (size_t k = 0; k < a.x_signs.size(); ++k) {
        require(std::abs(a.x_signs[k]) == 1 && std::abs(a.y_signs[k]) == 1,
                "assignment signs must be +1 or -1");
        product *= cdouble(a.x_signs[k], a.y_signs[k]);
    }
    return product;
}

LhvBoundResult LhvBoundResult::analytic(int n_qubits) {
    const AnalyticBounds bounds = analytic_bounds(n_qubits);
    LhvBoundResult r;
    r.n_qubits = n_qubits;
    r.max_abs_plus = bounds.individual;
    r.max_abs_minus = bounds.individual;
    r.max_sum = bounds.sum;
    r.assignments_scanned = 0;
    r.reduction_factor = 1;
    r.method = BoundMethod::Analytic;
    return r;
}

LhvBoundResult enumerate_bounds(int n_qubits, const EnumerationOptions& options) {
    require(n_qubits >= 1, "enumeration needs at least one qubit");
    const int cap = options.cap_qubits;
    const int effective = options.symmetry_reduction ? n_qubits - 1 : n_qubits;
    if (effective > cap)
        throw capacity_error("enumeration over 4^" + std::to_string(n_qubits) +
                             " assignments exceeds the cap of 4^" + std::to_string(cap));

    const int n_hi = (n_qubits + 1) / 2;  // qubit 1 lives in the high half
    const int n_lo = n_qubits - n_hi;
    const auto hi = half_products(n_hi, options.symmetry_reduction);
    const auto lo = half_products(n_lo, false);
    const int lo_bits = 2 * n_lo;

    const int threads = resolve_threads(options.max_threads);
    ScanResult total;
    if (threads <= 1 || hi.size() < 64) {
        total = scan_range(hi, lo, 0, hi.size(), lo_bits);
    } else {
        const size_t chunks = std::min<size_t>(static_cast<size_t>(threads), hi.size());
        std::vector<ScanResult> results(chunks);
        std::vector<std::thread> workers;
        workers.reserve(chunks);
        for (size_t c = 0; c < chunks; ++c) {
            const size_t begin = hi.size() * c / chunks;
            const size_t end = hi.size() * (c + 1) / chunks;
            workers.emplace_back([&, c, begin, end] {
                results[c] = scan_range(hi, lo, begin, end, lo_bits);
            });
        }
        for (auto& w : workers) w.join();
        total = results[0];
        for (size_t c = 1; c < chunks; ++c) merge_in_order(total, results[c]);
    }

    LhvBoundResult r;
    r.n_qubits = n_qubits;
    r.max_abs_plus = total.plus.value;
    r.max_abs_minus = total.minus.value;
    r.max_sum = total.sum.value;
    r.witness_plus = assignment_from_index(n_qubits, total.plus.index);
    r.witness_minus = assignment_from_index(n_qubits, total.minus.index);
    r.witness_sum = assignment_from_index(n_qubits, total.sum.index);
    r.assignments_scanned = hi.size() * static_cast<std::uint64_t>(lo.size());
    r.reduction_factor = options.symmetry_reduction ? 4 : 1;
    r.method = BoundMethod::Enumerated;
    return r;
}

AnalyticBounds analytic_bounds(int n_qubits) {
    require(n_qubits >= 1, "bounds need at least one qubit");
    if (n_qubits % 2 == 1) {
        return {std::ldexp(1.0, (n_qubits - 1) / 2), std::ldexp(1.0, (n_qubits + 1) / 2)};
    }
    const double even = std::ldexp(1.0, n_qubits / 2);
    return {even, even};
}

MrsReport check_mrs(int n_qubits, const EnumerationOptions& options) {
    constexpr double kTol = 1e-9;
    MrsReport report;
    report.n_qubits = n_qubits;
    report.bounds = enumerate_bounds(n_qubits, options);
    const AnalyticBounds expected = analytic_bounds(n_qubits);
    const bool odd = n_qubits % 2 == 1;

    const auto add = [&](const std::string& quantity, double enumerated,
                         double analytic, bool asserted) {
        report.items.push_back({quantity, enumerated, analytic, asserted,
                                std::abs(enumerated - analytic) <= kTol});
    };
    add("max_abs_plus", report.bounds.max_abs_plus, expected.individual, odd);
    add("max_abs_minus", report.bounds.max_abs_minus, expected.individual, odd);
    add("max_sum", report.bounds.max_sum, expected.sum, !odd);

    report.passed = true;
    for (const MrsCheckItem& item : report.items)
        if (item.asserted && !item.ok) report.passed = false;
    return report;
}

}  // namespace bellgap
