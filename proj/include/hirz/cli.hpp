#pragma once

#include "hirz/json_io.hpp"

#include <optional>
#include <string>

namespace hirz::cli {

enum ExitCode { Ok = 0, Validation = 1, Computation = 2, BoundViolation = 3 };

struct RunConfig {
    std::string command;  // lattice | germ | bound | verify
    std::string input_path;
    std::string format = "text";
    std::optional<Integer> gamma;
};

struct RunResult {
    int exit_code = Ok;
    std::string out;
    std::string err;
};

// Command reports as JSON. Each throws ValidationError / ComputationError.
Json cmd_lattice(const Json& in);
Json cmd_germ(const Json& in);
Json cmd_bound(const Json& in, std::optional<Integer> gamma);
Json cmd_verify(const Json& in);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
std::string render_text(const Json& j);

// Runs a command on an already-parsed input; never throws.
RunResult run(const std::string& command, const Json& in, const std::string& format,
              std::optional<Integer> gamma = std::nullopt);
RunResult run(const RunConfig& cfg);

}  // namespace hirz::cli
