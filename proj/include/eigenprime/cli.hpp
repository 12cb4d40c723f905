#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eigenprime/ratio.hpp"
#include "eigenprime/surface.hpp"

namespace eigenprime::cli {

enum class Command { count, sweep, verify, regions, classify, enumerate, charpoly, constants };
enum class MethodChoice { fast, brute, both };
enum class What { box, surface, plane, all };
enum class Format { csv, json };

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
    Command command = Command::constants;
    std::optional<std::uint64_t> n;
    std::vector<std::uint64_t> ns;
    What what = What::all;
    std::optional<std::int64_t> m;
    std::optional<Ratio> k1;
    std::optional<Ratio> k2;
    std::optional<Ratio> k3;
    bool mod3 = false;
    std::optional<std::uint64_t> p;
    std::optional<Triple> triple;
    std::optional<double> angle_deg;
    std::uint64_t max_n = 200;
    MethodChoice method = MethodChoice::fast;
    unsigned threads = 1;
    Format format = Format::json;
    std::optional<std::string> out;
};

struct ParseOutcome {
    std::optional<RunConfig> config;
    /// Set when parsing finished without a config (help, or an error).
    int exit_code = kExitOk;
    std::string message;
};

/// Parses `eigenprime <command> [flags]`. The default for --threads comes
/// from `default_threads` (the EIGENPRIME_THREADS environment variable in
/// the executable).
ParseOutcome parse_args(int argc, const char* const* argv, unsigned default_threads = 1);

/// Executes a config. Results go to `out` unless config.out names a file;
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Thread count from EIGENPRIME_THREADS, or 1.
unsigned threads_from_env();

}  // namespace eigenprime::cli
