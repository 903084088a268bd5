#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "almost_hilbert/cli.hpp"

namespace ah {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string joined_params(const Params& params) {
    std::string s;
    for (const auto& [k, v] : params) s += (s.empty() ? "" : ";") + k + "=" + v;
    return s;
}

std::string suite_of(const std::string& check) {
    const auto dot = check.find('.');
    return dot == std::string::npos ? std::string() : check.substr(0, dot);
}

void emit_json(const VerificationReport& r, std::ostream& out, bool timing) {
    using nlohmann::json;
    json doc = json::object();
    doc["schema"] = 1;
    doc["suite"] = r.suite;
    doc["seed"] = r.seed;
    doc["passed"] = r.passed();
    doc["failures"] = r.failures();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json params = json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        checks.push_back({{"name", c.name},
                          {"status", to_string(c.status)},
                          {"worst_violation", c.worst_violation},
                          {"tolerance", c.tolerance},
                          {"samples", c.samples},
                          {"params", params}});
    }
    doc["checks"] = checks;
    json tails = json::object();
    for (const auto& [k, v] : r.tail_bounds) tails[k] = v;
    doc["tail_bounds"] = tails;
    if (timing) doc["duration_seconds"] = r.duration_seconds;
    out << doc.dump(2) << '\n';
}

void emit_csv(const VerificationReport& r, std::ostream& out) {
    out << "name,status,worst_violation,tolerance,samples,params\n";
    for (const auto& c : r.checks)
        out << csv_field(c.name) << ',' << to_string(c.status) << ',' << param_value(c.worst_violation) << ','
            << param_value(c.tolerance) << ',' << c.samples << ',' << csv_field(joined_params(c.params)) << '\n';
}

void emit_text(const VerificationReport& r, std::ostream& out, bool timing) {
    out << "suite " << r.suite << "  seed " << r.seed << '\n';
    struct Worst {
        const Check* check = nullptr;
        double ratio = -1.0;
    };
    std::map<std::string, Worst> worst;
    for (const auto& c : r.checks) {
        const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "MEAS";
        out << "  " << tag << "  " << c.name << "  ";
        if (c.status == CheckStatus::measured) {
            out << "value " << sci(c.worst_violation);
        } else {
            out << "worst " << sci(c.worst_violation) << "  tol " << sci(c.tolerance);
            const double ratio = std::isnan(c.worst_violation) ? INFINITY
                                 : c.tolerance > 0.0           ? c.worst_violation / c.tolerance
                                 : c.worst_violation > 0.0     ? INFINITY
                                                               : 0.0;
            auto& w = worst[suite_of(c.name)];
            if (ratio > w.ratio) w = {&c, ratio};
        }
        out << "  n=" << c.samples << '\n';
    }
    if (!r.tail_bounds.empty()) {
        out << "tail bounds\n";
        for (const auto& [k, v] : r.tail_bounds) out << "  " << k << "  " << sci(v) << '\n';
    }
    if (!worst.empty()) {
        out << "worst violation per suite\n";
        for (const auto& [suite, w] : worst)
            out << "  " << suite << "  " << w.check->name << "  " << sci(w.check->worst_violation) << " / tol "
                << sci(w.check->tolerance) << '\n';
    }
    if (timing) out << "duration " << sci(r.duration_seconds) << " s\n";
    out << "result " << (r.passed() ? "PASS" : "FAIL") << "  " << r.failures() << " failed of " << r.checks.size()
        << " checks\n";
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown format: " + name);
}

void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out, bool timing) {
    switch (format) {
        case ReportFormat::json: emit_json(report, out, timing); break;
        case ReportFormat::csv: emit_csv(report, out); break;
        case ReportFormat::text: emit_text(report, out, timing); break;
    }
}

}  // namespace ah
