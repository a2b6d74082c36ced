#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "weylcert/report.hpp"

namespace weylcert {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::kPass: return "PASS";
        case CheckStatus::kFail: return "FAIL";
        case CheckStatus::kIndeterminate: return "INDETERMINATE";
    }
    return "?";
}

CheckResult& VerificationReport::add(const std::string& name, double residual,
                                     double tolerance, const std::string& note) {
    if (find(name) != nullptr)
        throw std::logic_error("verification report: duplicate check " + name);
    CheckResult c;
    c.name = name;
    c.residual = residual;
    c.tolerance = tolerance;
    c.status = residual <= tolerance ? CheckStatus::kPass : CheckStatus::kFail;
    c.note = note;
    checks.push_back(std::move(c));
    return checks.back();
}

CheckResult& VerificationReport::add_indeterminate(const std::string& name, double residual,
                                                   const std::string& note) {
    if (find(name) != nullptr)
        throw std::logic_error("verification report: duplicate check " + name);
    CheckResult c;
    c.name = name;
    c.residual = residual;
    c.tolerance = 0.0;
    c.status = CheckStatus::kIndeterminate;
    c.note = note;
    checks.push_back(std::move(c));
    return checks.back();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool VerificationReport::pass() const {
    for (const CheckResult& c : checks)
        if (c.status != CheckStatus::kPass) return false;
    return true;
}

bool VerificationReport::indeterminate() const {
    bool open = false;
    for (const CheckResult& c : checks) {
        if (c.status == CheckStatus::kFail) return false;
        if (c.status == CheckStatus::kIndeterminate) open = true;
    }
    return open;
}

int VerificationReport::exit_code() const {
    if (pass()) return 0;
    return indeterminate() ? 2 : 1;
}

namespace {

// %.12e keeps the rendering independent of locale and platform defaults.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

}  // namespace

std::string report_json(const VerificationReport& r, bool with_timestamp) {
    nlohmann::json j;  // std::map storage keeps keys sorted
    j["schema"] = "weylcert-report-v1";
    j["fixture"] = r.fixture;
    j["stage"] = r.stage;
    j["config_hash"] = r.config_hash;
    j["runtime_seconds"] = num(r.runtime_seconds);
    j["pass"] = r.pass();
    j["exit_code"] = r.exit_code();
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now();
        j["timestamp_unix_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch())
                .count();
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["residual"] = num(c.residual);
        e["tolerance"] = num(c.tolerance);
        e["status"] = to_string(c.status);
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
    std::string out;
    for (const CheckResult& c : r.checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-34s %13s  %-9.3e <= %-9.3e  %s\n", c.name.c_str(),
                      to_string(c.status), c.residual, c.tolerance,
                      c.note.c_str());
        out += line;
    }
    char tail[120];
    std::snprintf(tail, sizeof(tail), "%-34s %13s\n", "overall",
                  r.pass() ? "PASS" : (r.indeterminate() ? "INDETERMINATE" : "FAIL"));
    out += tail;
    return out;
}

}  // namespace weylcert
