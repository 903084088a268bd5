#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "almost_hilbert/report.hpp"

namespace ah {

/// Zero for dim and trials selects the per-check defaults (dimension sweep
/// {4, 8, 16}; the trial counts of the acceptance sweeps).
struct SuiteParams {
    std::size_t dim = 0;
    std::size_t grid = 1024;
    double p = 3.0;
    double q = 3.0;
    double alpha = 0.25;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;  // multiplies every declared tolerance
    std::size_t cubes = 256;
};

/// Throws std::invalid_argument when a parameter is outside its documented range.
void validate(const SuiteParams& params);

/// embedding, adjoint, schatten, ks2, integral
const std::vector<std::string>& suite_names();

/// Every check name a suite emits, sorted; "all" yields the union.
std::vector<std::string> check_names(const std::string& suite);

/// Runs the named suite. Unknown names and invalid params throw std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);

/// JSON carries schema 1 with a fixed key order; duration is included only
/// when requested so that reports are byte-reproducible.
void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out, bool timing = false);

}  // namespace ah
