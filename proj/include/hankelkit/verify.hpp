#pragma once

// Identity-check runner behind `hankelkit verify`.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hk::verify {

enum class Status { pass, fail };

struct CheckResult {
    std::string id;
    std::string paper_ref; ///< the identity being checked, in words
    std::map<std::string, std::string> params;
    Status status = Status::fail;
    std::string expected;
    std::string actual;
};

struct Options {
    std::vector<std::string> scopes{"all"};
    long r_max = 4;
    std::size_t n_max = 8;
    bool parallel = false;
};

struct Report {
    std::vector<CheckResult> checks; ///< sorted by id
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool all_passed() const noexcept { return failed == 0; }
};

/// Valid scope names: all, series, sequences, riordan, hankel, production, berlekamp.
const std::vector<std::string>& scope_names();

/// Throws std::invalid_argument for an unknown scope or r_max < 1.
Report run(const Options& options);

/// Canonical JSON (sorted keys, every number rendered as a string).
std::string to_json(const Report& report);

} // namespace hk::verify
