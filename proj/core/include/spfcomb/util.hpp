#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spfcomb {

/// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);

/// Fixed-point formatting, e.g. format_fixed(3.14159, 2) == "3.14".
std::string format_fixed(double v, int decimals);

/// Parses a double; accepts optional leading '+'. Returns false on any
/// trailing garbage or non-finite result.
bool parse_double(std::string_view s, double& out);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

/// Deterministic RNG helpers pinned to a fixed algorithm so synthetic
/// fixtures are reproducible from a seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace spfcomb
