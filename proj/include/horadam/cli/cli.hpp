#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace horadam::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kOutputDirEnv = "HORADAM_OUTPUT_DIR";

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    /// Domain, parse and I/O errors exit with kErrorBase + ErrorCode.
    kErrorBase = 10,
};

struct RunConfig {
    std::string subcommand;
    std::string seq = "fibonacci";
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::optional<std::size_t> N;
    std::optional<std::size_t> r;
    std::optional<std::size_t> s;
    std::optional<std::size_t> m;
    std::vector<std::size_t> parts;
    std::vector<std::string> schemes;
    std::string formula;
    std::string model;
    std::string s_expr = "s";
    std::string t_expr = "t";
    long qf = 2;
    long alpha = 2;
    bool search_tiling = false;
    bool intervals_only = false;
    std::size_t budget = 1000000;
    std::string expr;
    std::vector<std::string> assignments;
    std::optional<std::string> divide_by;
    std::string format = "json";
    std::string out;
};

/// Executes one subcommand and writes its report to `out` (or the --out file).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli
