#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bellgap/types.hpp"

namespace bellgap::cli {

enum class Command { Bounds, Ghz, Optimize, VerifyLhv, Schmidt, Report };

struct RunConfig {
    Command command = Command::Bounds;
    int n = 0;  // single-N form
    int n_lo = 0;
    int n_hi = 0;
    bool has_range = false;
    std::vector<double> theta_grid;  // empty -> {0, pi/2, pi/4}
    std::uint64_t seed = 0;
    int restarts = 64;
    int cap = kDefaultEnumerationCap;
    std::string format = "json";  // json | csv
    std::string out_path;         // empty -> stream
    std::string input_path;       // verify-lhv, schmidt
    std::string cut;              // schmidt, e.g. "1,2|3,4"
};

// Exit codes: 0 pass, 1 input error, 2 check failure, 3 capacity exceeded.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; same exit-code convention (help prints and
// returns 0).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts plain radians plus the forms "pi", "pi/4", "3*pi/2", "-pi/2".
double parse_theta(const std::string& token);

}  // namespace bellgap::cli
