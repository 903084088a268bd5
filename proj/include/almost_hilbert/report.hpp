#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ah {

enum class CheckStatus { pass, fail, measured };

const char* to_string(CheckStatus s);

using Params = std::vector<std::pair<std::string, std::string>>;

/// Formats a real for report params with round-trip precision.
std::string param_value(double v);
std::string param_value(std::int64_t v);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double worst_violation = 0.0;  // for measured checks: the measured value
    double tolerance = 0.0;
    std::size_t samples = 0;
    Params params;
};

/// Outcome of a property suite. A check fails iff its worst violation
/// exceeds its tolerance (NaN counts as a failure).
struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> tail_bounds;
    double duration_seconds = 0.0;

    Check& add_check(std::string name, double worst, double tolerance, std::size_t samples, Params params = {});
    Check& add_measurement(std::string name, double value, std::size_t samples, Params params = {});
    void add_tail_bound(std::string name, double value);

    /// Appends the other report's checks and tail bounds, prefixing names.
    void merge(const VerificationReport& other, const std::string& prefix = "");
    void sort_checks();

    bool passed() const;
    std::size_t failures() const;
    const Check* find(const std::string& name) const;
};

}  // namespace ah
