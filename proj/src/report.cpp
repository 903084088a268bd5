#include "almost_hilbert/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ah {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::measured: return "measured";
    }
    return "unknown";
}

std::string param_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string param_value(std::int64_t v) { return std::to_string(v); }

Check& VerificationReport::add_check(std::string name, double worst, double tolerance, std::size_t samples, Params params) {
    const bool ok = !std::isnan(worst) && worst <= tolerance;
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, worst, tolerance, samples, std::move(params)});
    return checks.back();
}

Check& VerificationReport::add_measurement(std::string name, double value, std::size_t samples, Params params) {
    checks.push_back({std::move(name), CheckStatus::measured, value, 0.0, samples, std::move(params)});
    return checks.back();
}

void VerificationReport::add_tail_bound(std::string name, double value) { tail_bounds.emplace_back(std::move(name), value); }

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
    for (const auto& [k, v] : other.tail_bounds) tail_bounds.emplace_back(prefix + k, v);
}

void VerificationReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    std::stable_sort(tail_bounds.begin(), tail_bounds.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; }));
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace ah
