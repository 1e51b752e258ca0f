#include "bellgap/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace bellgap::io {

namespace {

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

cdouble complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        fail(std::string(what) + " must be a [re, im] pair");
    return {number(j[0], what), number(j[1], what)};
}

json complex_to(cdouble z) { return json::array({z.real(), z.imag()}); }

std::string sign_string(const std::vector<int>& signs) {
    std::string s;
    s.reserve(signs.size());
    for (int v : signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    if (ec != std::errc{}) fail("value not representable");
    return std::string(buffer, ptr);
}

json to_json(const PureState& state) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < state.dim(); ++i)
        amps.push_back(complex_to(state.amplitude(i)));
    return json{{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

json to_json(const DensityOperator& rho) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < rho.dim(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < rho.dim(); ++c)
            row.push_back(complex_to(rho.matrix()(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"n_qubits", rho.n_qubits()}, {"matrix", std::move(rows)}};
}

json to_json(const BellExpansion& expansion) {
    json terms = json::array();
    for (const BellTerm& term : expansion.terms)
        terms.push_back(json{{"setting", term.setting}, {"coeff", term.coeff}});
    return json{{"n_qubits", expansion.n_qubits},
                {"kind", expansion.kind == BellKind::Plus ? "plus" : "minus"},
                {"terms", std::move(terms)}};
}

std::string encode_signs(const LhvAssignment& a) {
    if (a.x_signs.empty()) return "";
    return "x:" + sign_string(a.x_signs) + ",y:" + sign_string(a.y_signs);
}

json to_json(const LhvBoundResult& result) {
    return json{
        {"n_qubits", result.n_qubits},
        {"max_abs_plus", result.max_abs_plus},
        {"max_abs_minus", result.max_abs_minus},
        {"max_sum", result.max_sum},
        {"witness_plus", encode_signs(result.witness_plus)},
        {"witness_minus", encode_signs(result.witness_minus)},
        {"witness_sum", encode_signs(result.witness_sum)},
        {"assignments_scanned", result.assignments_scanned},
        {"reduction_factor", result.reduction_factor},
        {"method", result.method == BoundMethod::Enumerated ? "enumerated" : "analytic"},
    };
}

json to_json(const MrsReport& report) {
    json items = json::array();
    for (const MrsCheckItem& item : report.items)
        items.push_back(json{{"quantity", item.quantity},
                             {"enumerated", item.enumerated},
                             {"expected", item.expected},
                             {"asserted", item.asserted},
                             {"ok", item.ok}});
    json j = to_json(report.bounds);
    j["mrs_check"] = json{{"passed", report.passed}, {"items", std::move(items)}};
    return j;
}

json to_json(const SeparableDecomposition& d) {
    json terms = json::array();
    for (const SeparableTerm& term : d.terms) {
        json qubits = json::array();
        for (const QubitPure& q : term.product.qubits)
            qubits.push_back(json::array(
                {q.alpha.real(), q.alpha.imag(), q.beta.real(), q.beta.imag()}));
        terms.push_back(json{{"weight", term.weight}, {"qubits", std::move(qubits)}});
    }
    return json{{"n_qubits", d.n_qubits}, {"terms", std::move(terms)}};
}

json to_json(const MixedSeparableInput& m) {
    json terms = json::array();
    for (const MixedFactorTerm& term : m.terms) {
        json factors = json::array();
        for (const Eigen::Matrix2cd& f : term.factors) {
            factors.push_back(json::array(
                {json::array({complex_to(f(0, 0)), complex_to(f(0, 1))}),
                 json::array({complex_to(f(1, 0)), complex_to(f(1, 1))})}));
        }
        terms.push_back(json{{"weight", term.weight}, {"factors", std::move(factors)}});
    }
    return json{{"n_qubits", m.n_qubits}, {"observables", "xy"}, {"terms", std::move(terms)}};
}

json to_json(const ViolationReport& report) {
    return json{
        {"n_qubits", report.n_qubits},
        {"theta", report.theta},
        {"quantum_plus", report.quantum_plus},
        {"quantum_minus", report.quantum_minus},
        {"quantum_sum", report.quantum_sum},
        {"separable_bound_individual", report.separable_bound_individual},
        {"separable_bound_sum", report.separable_bound_sum},
        {"lhv_bound_individual", report.lhv_bound_individual},
        {"lhv_bound_sum", report.lhv_bound_sum},
        {"lhv_bound_method",
         report.lhv_method == BoundMethod::Enumerated ? "enumerated" : "analytic"},
        {"ratio_vs_separable", report.ratio_vs_separable},
        {"ratio_vs_lhv", report.ratio_vs_lhv},
        {"maximality_flag", report.maximality_flag},
    };
}

PureState pure_state_from_json(const json& j) {
    const int n = integer(member(j, "n_qubits"), "n_qubits");
    if (n < 1 || n > kMaxStateQubits) fail("n_qubits out of range");
    const json& amps = member(j, "amplitudes");
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n))
        fail("amplitudes must hold 2^N [re, im] pairs");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = complex_from(amps[i], "amplitude");
    return PureState(n, std::move(v));
}

DensityOperator density_from_json(const json& j) {
    const int n = integer(member(j, "n_qubits"), "n_qubits");
    if (n < 1 || n > kMaxDenseQubits) fail("n_qubits out of range");
    const json& rows = member(j, "matrix");
    const std::size_t dim = std::size_t{1} << n;
    if (!rows.is_array() || rows.size() != dim) fail("matrix must be 2^N x 2^N");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        if (!rows[r].is_array() || rows[r].size() != dim)
            fail("matrix must be 2^N x 2^N");
        for (std::size_t c = 0; c < dim; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from(rows[r][c], "matrix entry");
    }
    return DensityOperator::from_matrix(n, std::move(m));
}

SeparableDecomposition separable_from_json(const json& j) {
    const int n = integer(member(j, "n_qubits"), "n_qubits");
    const json& terms = member(j, "terms");
    if (!terms.is_array() || terms.empty()) fail("terms must be a non-empty array");
    std::vector<SeparableTerm> parsed;
    parsed.reserve(terms.size());
    for (const json& term : terms) {
        const double weight = number(member(term, "weight"), "weight");
        const json& qubits = member(term, "qubits");
        if (!qubits.is_array() || static_cast<int>(qubits.size()) != n)
            fail("each term must list one qubit per site");
        std::vector<QubitPure> qs;
        qs.reserve(qubits.size());
        for (const json& q : qubits) {
            if (!q.is_array() || q.size() != 4)
                fail("qubits must be [re_a, im_a, re_b, im_b] quadruples");
            qs.emplace_back(cdouble(number(q[0], "re_a"), number(q[1], "im_a")),
                            cdouble(number(q[2], "re_b"), number(q[3], "im_b")));
        }
        parsed.push_back({weight, ProductState(std::move(qs))});
    }
    return SeparableDecomposition(n, std::move(parsed));
}

MixedSeparableInput mixed_separable_from_json(const json& j) {
    const int n = integer(member(j, "n_qubits"), "n_qubits");
    if (j.contains("observables") && j.at("observables") != "xy")
        fail("only the \"xy\" observable set is supported");
    const json& terms = member(j, "terms");
    if (!terms.is_array() || terms.empty()) fail("terms must be a non-empty array");
    std::vector<MixedFactorTerm> parsed;
    parsed.reserve(terms.size());
    for (const json& term : terms) {
        MixedFactorTerm t;
        t.weight = number(member(term, "weight"), "weight");
        const json& factors = member(term, "factors");
        if (!factors.is_array() || static_cast<int>(factors.size()) != n)
            fail("each term must carry one 2x2 factor per qubit");
        for (const json& f : factors) {
            if (!f.is_array() || f.size() != 2 || !f[0].is_array() ||
                !f[1].is_array() || f[0].size() != 2 || f[1].size() != 2)
                fail("factors must be 2x2 matrices of [re, im] pairs");
            Eigen::Matrix2cd m;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    m(r, c) = complex_from(f[static_cast<std::size_t>(r)]
                                            [static_cast<std::size_t>(c)],
                                           "factor entry");
            t.factors.push_back(m);
        }
        parsed.push_back(std::move(t));
    }
    return MixedSeparableInput(n, std::move(parsed));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail("invalid JSON in " + path + ": " + e.what());
    }
}

std::string violation_csv_header() {
    return "n,theta,q_plus,q_minus,q_sum,sep_bound,lhv_bound,ratio_sep,ratio_lhv,maximal";
}

std::string violation_csv_row(const ViolationReport& r) {
    // The bound columns are the ones the ratio columns were computed against:
    // whichever separable inequality is violated hardest, and the parity form
    // of the local-reality bound.
    const double individual = std::max(std::abs(r.quantum_plus), std::abs(r.quantum_minus));
    const bool sum_form_won =
        r.quantum_sum / r.separable_bound_sum > individual / r.separable_bound_individual;
    const double sep_bound =
        sum_form_won ? r.separable_bound_sum : r.separable_bound_individual;
    const double lhv_bound =
        r.n_qubits % 2 == 1 ? r.lhv_bound_individual : r.lhv_bound_sum;
    std::string row;
    row += std::to_string(r.n_qubits);
    row += ',';
    row += format_double(r.theta);
    row += ',';
    row += format_double(r.quantum_plus);
    row += ',';
    row += format_double(r.quantum_minus);
    row += ',';
    row += format_double(r.quantum_sum);
    row += ',';
    row += format_double(sep_bound);
    row += ',';
    row += format_double(lhv_bound);
    row += ',';
    row += format_double(r.ratio_vs_separable);
    row += ',';
    row += format_double(r.ratio_vs_lhv);
    row += ',';
    row += r.maximality_flag ? '1' : '0';
    return row;
}

}  // namespace bellgap::io
