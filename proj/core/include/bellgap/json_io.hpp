#pragma once

#include <string>

#include "json.hpp"

#include "bellgap/bell_operators.hpp"
#include "bellgap/lhv.hpp"
#include "bellgap/schmidt.hpp"
#include "bellgap/separability.hpp"
#include "bellgap/states.hpp"
#include "bellgap/violation.hpp"

namespace bellgap::io {

// Insertion-ordered documents keep output key order stable, so identical
// inputs serialize byte-identically.
using json = nlohmann::ordered_json;

// Shortest round-trip decimal form of a double (used for CSV fields).
std::string format_double(double v);

// --- serialization --------------------------------------------------------
// {"n_qubits": N, "amplitudes": [[re, im], ...]}
json to_json(const PureState& state);
// {"n_qubits": N, "matrix": [[[re, im], ...], ...]} row-major
json to_json(const DensityOperator& rho);
// {"n_qubits": N, "kind": "plus"|"minus", "terms": [{"setting": "...", "coeff": c}]}
json to_json(const BellExpansion& expansion);
json to_json(const LhvBoundResult& result);
json to_json(const MrsReport& report);
// {"n_qubits": N, "terms": [{"weight": r, "qubits": [[re_a, im_a, re_b, im_b], ...]}]}
json to_json(const SeparableDecomposition& d);
json to_json(const MixedSeparableInput& m);
json to_json(const ViolationReport& report);

// "x:++-+,y:-++-"
std::string encode_signs(const LhvAssignment& a);

// --- parsing (throws std::invalid_argument on malformed input) ------------
PureState pure_state_from_json(const json& j);
DensityOperator density_from_json(const json& j);
SeparableDecomposition separable_from_json(const json& j);
MixedSeparableInput mixed_separable_from_json(const json& j);

json load_json_file(const std::string& path);

// --- CSV (grid sweeps) -----------------------------------------------------
// Column order is fixed: n,theta,q_plus,q_minus,q_sum,sep_bound,lhv_bound,
// ratio_sep,ratio_lhv,maximal. sep_bound/lhv_bound are the bounds the two
// ratio columns were computed against; maximal is 0/1.
std::string violation_csv_header();
std::string violation_csv_row(const ViolationReport& report);

}  // namespace bellgap::io
