#pragma once

#include <map>
#include <string>
#include <vector>

namespace weylcert {

enum class CheckStatus { kPass, kFail, kIndeterminate };

const char* to_string(CheckStatus s);

// One named residual measured against its tolerance.  Checks that bound a
// quantity from below store max(0, floor - measured) as the residual with
// tolerance 0, so residual <= tolerance always means pass; the note keeps
// the measured number.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::kPass;
    std::string note;
};

struct VerificationReport {
    std::string fixture;
    std::string stage;  // last pipeline stage reached; empty means complete
    std::string config_hash;
    double runtime_seconds = 0.0;
    std::vector<CheckResult> checks;

    // Throws if the name is already present: every check appears once.
    CheckResult& add(const std::string& name, double residual, double tolerance,
                     const std::string& note = "");
    CheckResult& add_indeterminate(const std::string& name, double residual,
                                   const std::string& note);
    const CheckResult* find(const std::string& name) const;

    bool pass() const;           // every check passed
    bool indeterminate() const;  // no failure, but at least one open verdict
    int exit_code() const;       // 0 pass, 1 fail, 2 indeterminate
};

// Deterministic JSON rendering: sorted keys, fixed number formatting.  The
// timestamp field is the only part that varies between identical runs.
std::string report_json(const VerificationReport& r, bool with_timestamp = true);

// Compact one-line-per-check text table for terminals.
std::string report_text(const VerificationReport& r);

}  // namespace weylcert
