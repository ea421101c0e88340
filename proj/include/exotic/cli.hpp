#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace exotic::cli {

/// Limits and tuning knobs. Read from a key=value file (path from --config or
/// EXOTIC_CONFIG), then overridden by command-line flags.
struct Config {
    int rank_cap = 8;
    int degree_cap = 12;
    int closure_depth = 4;
    std::size_t cache_bytes = std::size_t{256} << 20;
    int threads = 1;

    /// DomainError on unknown keys or non-positive values.
    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path);
    void validate() const;
};

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error or bad usage, 2 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace exotic::cli
