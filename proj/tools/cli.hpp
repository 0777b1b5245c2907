#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "records.hpp"

namespace touchard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kDepthEnv = "TOUCHARD_DEPTH";
inline constexpr const char* kCapEnv = "TOUCHARD_CAP";

struct RunConfig {
    std::size_t table_depth = 200;
    std::size_t enumeration_cap = 12;
    OutputFormat format = OutputFormat::tsv;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
EnvLookup process_env();

/// Runs one subcommand. args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env);

}  // namespace touchard::cli
