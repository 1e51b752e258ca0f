#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bellgap/json_io.hpp"
#include "bellgap/lhv.hpp"
#include "bellgap/schmidt.hpp"
#include "bellgap/separability.hpp"
#include "bellgap/violation.hpp"

namespace bellgap::cli {

namespace {

using io::json;

constexpr double kOptimizerSlack = 1e-6;
constexpr double kResidualThreshold = 1e-10;

[[noreturn]] void bad_input(const std::string& message) {
    throw std::invalid_argument(message);
}

double parse_plain_double(const std::string& s) {
    double value = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) bad_input("cannot parse number: " + s);
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

Bipartition parse_cut(const std::string& spec, int n_qubits) {
    const auto sides = split(spec, '|');
    if (sides.size() != 2) bad_input("cut must look like \"1,2|3,4\"");
    std::vector<std::vector<int>> lists;
    for (const std::string& side : sides) {
        std::vector<int> qubits;
        for (const std::string& token : split(side, ',')) {
            if (token.empty()) bad_input("cut lists an empty qubit label");
            int q = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                bad_input("cut labels must be integers: " + token);
            qubits.push_back(q);
        }
        lists.push_back(std::move(qubits));
    }
    return Bipartition(n_qubits, std::move(lists[0]), std::move(lists[1]));
}

std::vector<int> qubit_list(const RunConfig& cfg, int minimum) {
    std::vector<int> ns;
    if (cfg.has_range) {
        if (cfg.n_lo > cfg.n_hi) bad_input("--n-range must be A:B with A <= B");
        for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) ns.push_back(n);
    } else {
        ns.push_back(cfg.n);
    }
    for (int n : ns)
        if (n < minimum)
            bad_input("this command needs at least " + std::to_string(minimum) + " qubits");
    return ns;
}

std::vector<double> theta_list(const RunConfig& cfg) {
    if (!cfg.theta_grid.empty()) return cfg.theta_grid;
    return {0.0, std::numbers::pi / 2.0, std::numbers::pi / 4.0};
}

LhvBoundResult lhv_for(int n, const RunConfig& cfg) {
    if (n <= cfg.cap) {
        EnumerationOptions options;
        options.cap_qubits = cfg.cap;
        return enumerate_bounds(n, options);
    }
    return LhvBoundResult::analytic(n);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) bad_input("cannot write output file: " + cfg.out_path);
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    EnumerationOptions options;
    options.cap_qubits = cfg.cap;
    const MrsReport report = check_mrs(cfg.n, options);
    if (cfg.format == "csv") {
        std::string text =
            "n,max_abs_plus,max_abs_minus,max_sum,assignments_scanned,"
            "reduction_factor,mrs_passed\n";
        text += std::to_string(report.n_qubits) + ',' +
                io::format_double(report.bounds.max_abs_plus) + ',' +
                io::format_double(report.bounds.max_abs_minus) + ',' +
                io::format_double(report.bounds.max_sum) + ',' +
                std::to_string(report.bounds.assignments_scanned) + ',' +
                std::to_string(report.bounds.reduction_factor) + ',' +
                (report.passed ? "1" : "0") + "\n";
        emit(cfg, text, out);
    } else {
        emit(cfg, dump(io::to_json(report)), out);
    }
    return report.passed ? 0 : 2;
}

int cmd_ghz(const RunConfig& cfg, std::ostream& out) {
    const std::vector<int> ns = qubit_list(cfg, 2);
    const std::vector<double> thetas = theta_list(cfg);
    std::vector<ViolationReport> rows;
    for (int n : ns) {
        const LhvBoundResult lhv = lhv_for(n, cfg);
        for (double theta : thetas)
            rows.push_back(violation_report(GhzSpec{n, theta}, lhv));
    }
    if (cfg.format == "csv") {
        std::string text = io::violation_csv_header() + "\n";
        for (const ViolationReport& row : rows) text += io::violation_csv_row(row) + "\n";
        emit(cfg, text, out);
    } else {
        json reports = json::array();
        for (const ViolationReport& row : rows) reports.push_back(io::to_json(row));
        emit(cfg, dump(json{{"reports", std::move(reports)}}), out);
    }
    return 0;
}

json optimize_one(int n, OptimTarget target, const RunConfig& cfg, bool* reached) {
    OptimizerConfig ocfg;
    ocfg.restarts = cfg.restarts;
    ocfg.rng_seed = cfg.seed;
    const OptimizeResult result = maximize_over_separable(n, target, ocfg);
    const double bound =
        target == OptimTarget::Sum ? kSeparableBoundSum : kSeparableBoundIndividual;
    const bool ok = bound - result.value <= kOptimizerSlack;
    if (reached) *reached = ok;
    json qubits = json::array();
    for (const QubitPure& q : result.witness.qubits)
        qubits.push_back(json::array(
            {q.alpha.real(), q.alpha.imag(), q.beta.real(), q.beta.imag()}));
    const char* name = target == OptimTarget::Plus    ? "plus"
                       : target == OptimTarget::Minus ? "minus"
                                                      : "sum";
    return json{{"target", name},
                {"value", result.value},
                {"bound", bound},
                {"reached_bound", ok},
                {"best_restart", result.best_restart},
                {"witness", json{{"qubits", std::move(qubits)}}}};
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) bad_input("this command needs at least 1 qubit");
    bool all_ok = true;
    json results = json::array();
    for (OptimTarget target : {OptimTarget::Plus, OptimTarget::Minus, OptimTarget::Sum}) {
        bool ok = false;
        results.push_back(optimize_one(cfg.n, target, cfg, &ok));
        all_ok = all_ok && ok;
    }
    const json j{{"n_qubits", cfg.n},
                 {"seed", cfg.seed},
                 {"restarts", cfg.restarts},
                 {"results", std::move(results)},
                 {"passed", all_ok}};
    if (cfg.format == "csv") {
        std::string text = "target,value,bound,reached_bound\n";
        for (const json& r : j["results"])
            text += r["target"].get<std::string>() + ',' +
                    io::format_double(r["value"].get<double>()) + ',' +
                    io::format_double(r["bound"].get<double>()) + ',' +
                    (r["reached_bound"].get<bool>() ? "1" : "0") + "\n";
        emit(cfg, text, out);
    } else {
        emit(cfg, dump(j), out);
    }
    return all_ok ? 0 : 2;
}

int cmd_verify_lhv(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty()) bad_input("--input is required");
    const MixedSeparableInput input =
        io::mixed_separable_from_json(io::load_json_file(cfg.input_path));
    const double residual = verify_lhv_representation(input);
    const bool passed = residual < kResidualThreshold;
    const json j{{"n_qubits", input.n_qubits},
                 {"terms", input.terms.size()},
                 {"settings_checked", std::uint64_t{1} << input.n_qubits},
                 {"residual", residual},
                 {"threshold", kResidualThreshold},
                 {"passed", passed}};
    if (cfg.format == "csv") {
        emit(cfg,
             "n,terms,settings_checked,residual,passed\n" +
                 std::to_string(input.n_qubits) + ',' +
                 std::to_string(input.terms.size()) + ',' +
                 std::to_string(std::uint64_t{1} << input.n_qubits) + ',' +
                 io::format_double(residual) + ',' + (passed ? "1" : "0") + "\n",
             out);
    } else {
        emit(cfg, dump(j), out);
    }
    return passed ? 0 : 2;
}

int cmd_schmidt(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty()) bad_input("--input is required");
    if (cfg.cut.empty()) bad_input("--cut is required, e.g. --cut 1,2|3,4");
    const PureState state = io::pure_state_from_json(io::load_json_file(cfg.input_path));
    const Bipartition cut = parse_cut(cfg.cut, state.n_qubits());
    const SchmidtResult result = schmidt_decompose(state, cut);
    json coefficients = json::array();
    for (double p : result.coefficients) coefficients.push_back(p);
    const json j{{"n_qubits", state.n_qubits()},
                 {"side1", cut.side1},
                 {"side2", cut.side2},
                 {"coefficients", std::move(coefficients)},
                 {"rank", result.rank},
                 {"verdict", result.rank == 1 ? "separable" : "entangled"}};
    if (cfg.format == "csv") {
        std::string text = "n,rank,verdict,coefficients\n";
        text += std::to_string(state.n_qubits()) + ',' + std::to_string(result.rank) +
                ',' + (result.rank == 1 ? "separable" : "entangled") + ',';
        for (size_t i = 0; i < result.coefficients.size(); ++i) {
            if (i) text += ';';
            text += io::format_double(result.coefficients[i]);
        }
        text += "\n";
        emit(cfg, text, out);
    } else {
        emit(cfg, dump(j), out);
    }
    return 0;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
    const std::vector<int> ns = qubit_list(cfg, 2);
    const std::vector<double> thetas = theta_list(cfg);
    bool all_ok = true;
    json entries = json::array();
    std::string csv = io::violation_csv_header() + "\n";
    for (int n : ns) {
        json entry{{"n_qubits", n}};
        const LhvBoundResult lhv = lhv_for(n, cfg);
        if (lhv.method == BoundMethod::Enumerated) {
            EnumerationOptions options;
            options.cap_qubits = cfg.cap;
            const MrsReport mrs = check_mrs(n, options);
            all_ok = all_ok && mrs.passed;
            entry["mrs_check"] = io::to_json(mrs)["mrs_check"];
        } else {
            entry["mrs_check"] = nullptr;  // above the enumeration cap
        }
        entry["lhv_bound_method"] =
            lhv.method == BoundMethod::Enumerated ? "enumerated" : "analytic";
        json rows = json::array();
        for (double theta : thetas) {
            const ViolationReport row = violation_report(GhzSpec{n, theta}, lhv);
            rows.push_back(io::to_json(row));
            csv += io::violation_csv_row(row) + "\n";
        }
        entry["ghz"] = std::move(rows);
        json optima = json::array();
        for (OptimTarget target :
             {OptimTarget::Plus, OptimTarget::Minus, OptimTarget::Sum}) {
            bool ok = false;
            optima.push_back(optimize_one(n, target, cfg, &ok));
            all_ok = all_ok && ok;
        }
        entry["separable_optima"] = std::move(optima);
        entries.push_back(std::move(entry));
    }
    if (cfg.format == "csv") {
        emit(cfg, csv, out);
    } else {
        emit(cfg, dump(json{{"entries", std::move(entries)}, {"passed", all_ok}}), out);
    }
    return all_ok ? 0 : 2;
}

void parse_theta_options(const std::string& theta, const std::string& grid,
                         RunConfig& cfg) {
    if (!theta.empty() && !grid.empty())
        bad_input("--theta and --theta-grid are mutually exclusive");
    if (!theta.empty()) cfg.theta_grid = {parse_theta(theta)};
    if (!grid.empty())
        for (const std::string& token : split(grid, ','))
            cfg.theta_grid.push_back(parse_theta(token));
}

void parse_range(const std::string& range, RunConfig& cfg) {
    if (range.empty()) return;
    const auto parts = split(range, ':');
    if (parts.size() != 2) bad_input("--n-range must look like A:B");
    cfg.n_lo = static_cast<int>(parse_plain_double(parts[0]));
    cfg.n_hi = static_cast<int>(parse_plain_double(parts[1]));
    cfg.has_range = true;
}

}  // namespace

double parse_theta(const std::string& token) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) bad_input("empty angle");
    double sign = 1.0;
    if (s[0] == '-' || s[0] == '+') {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return sign * parse_plain_double(s);
    double factor = 1.0;
    std::string pre = s.substr(0, pos);
    if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) factor = parse_plain_double(pre);
    }
    double divisor = 1.0;
    const std::string post = s.substr(pos + 2);
    if (!post.empty()) {
        if (post[0] != '/') bad_input("cannot parse angle: " + token);
        divisor = parse_plain_double(post.substr(1));
        if (divisor == 0.0) bad_input("division by zero in angle: " + token);
    }
    return sign * factor * std::numbers::pi / divisor;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "json" && cfg.format != "csv")
            bad_input("--format must be json or csv");
        switch (cfg.command) {
            case Command::Bounds:
                return cmd_bounds(cfg, out);
            case Command::Ghz:
                return cmd_ghz(cfg, out);
            case Command::Optimize:
                return cmd_optimize(cfg, out);
            case Command::VerifyLhv:
                return cmd_verify_lhv(cfg, out);
            case Command::Schmidt:
                return cmd_schmidt(cfg, out);
            case Command::Report:
                return cmd_report(cfg, out);
        }
        return 1;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "check failure: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"N-qubit Bell correlation bounds, separability certificates and GHZ violation reports"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string theta, theta_grid, n_range;

    const auto add_common = [&](CLI::App* sub, bool with_theta) {
        sub->add_option("--format", cfg.format, "Output format: json or csv");
        sub->add_option("--out", cfg.out_path, "Write the report to this file");
        if (with_theta) {
            sub->add_option("--theta", theta, "Phase angle (radians; accepts pi/4 forms)");
            sub->add_option("--theta-grid", theta_grid, "Comma-separated phase angles");
        }
    };

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Exhaustive local-reality extremal values and bound check");
    bounds->add_option("--n", cfg.n, "Qubit count")->required();
    bounds->add_option("--cap", cfg.cap, "Enumeration cap (max qubits)");
    add_common(bounds, false);

    CLI::App* ghz = app.add_subcommand(
        "ghz", "GHZ-family expectation values and violation ratios");
    ghz->add_option("--n", cfg.n, "Qubit count");
    ghz->add_option("--n-range", n_range, "Inclusive qubit range A:B");
    ghz->add_option("--cap", cfg.cap, "Enumeration cap (max qubits)");
    add_common(ghz, true);

    CLI::App* optimize = app.add_subcommand(
        "optimize", "Maximize Bell expectations over pure product states");
    optimize->add_option("--n", cfg.n, "Qubit count")->required();
    optimize->add_option("--seed", cfg.seed, "Random seed");
    optimize->add_option("--restarts", cfg.restarts, "Multi-start restarts");
    add_common(optimize, false);

    CLI::App* verify = app.add_subcommand(
        "verify-lhv", "Check the hidden-variable representation of a separable input");
    verify->add_option("--input", cfg.input_path, "Mixed separable input JSON file")
        ->required();
    add_common(verify, false);

    CLI::App* schmidt = app.add_subcommand(
        "schmidt", "Biorthogonal coefficients and entanglement verdict");
    schmidt->add_option("--input", cfg.input_path, "Pure state JSON file")->required();
    schmidt->add_option("--cut", cfg.cut, "Bipartition, e.g. 1,2|3,4")->required();
    add_common(schmidt, false);

    CLI::App* report = app.add_subcommand(
        "report", "Aggregate certification: bounds, GHZ grid and separable optima");
    report->add_option("--n", cfg.n, "Qubit count");
    report->add_option("--n-range", n_range, "Inclusive qubit range A:B");
    report->add_option("--cap", cfg.cap, "Enumeration cap (max qubits)");
    report->add_option("--seed", cfg.seed, "Random seed");
    report->add_option("--restarts", cfg.restarts, "Multi-start restarts");
    add_common(report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bounds->parsed()) cfg.command = Command::Bounds;
        if (ghz->parsed()) cfg.command = Command::Ghz;
        if (optimize->parsed()) cfg.command = Command::Optimize;
        if (verify->parsed()) cfg.command = Command::VerifyLhv;
        if (schmidt->parsed()) cfg.command = Command::Schmidt;
        if (report->parsed()) cfg.command = Command::Report;
        parse_range(n_range, cfg);
        parse_theta_options(theta, theta_grid, cfg);
        if ((cfg.command == Command::Ghz || cfg.command == Command::Report) &&
            !cfg.has_range && cfg.n == 0)
            bad_input("either --n or --n-range is required");
        if (cfg.has_range && cfg.n != 0)
            bad_input("--n and --n-range are mutually exclusive");
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    }
    return run_command(cfg, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bellgap");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bellgap::cli
