#pragma once

#include <string>
#include <vector>

namespace cogrowth {

struct VerificationRecord {
    std::string name;
    std::string source;    // where the expected value comes from
    std::string computed;  // short rendering of what was computed
    bool pass = false;
};

struct VerificationReport {
    std::string fixture_set;
    std::vector<VerificationRecord> records;
    bool pass() const;
};

// Builtin fixture sets: "table1" (reference sequence rows), "thm12"
// (closed-form equation identities at N=14), "gap" (radius classification
// over the symmetric fixtures).  Unknown names throw std::invalid_argument.
VerificationReport run_verification(const std::string& fixture_set);

std::string render_report_text(const VerificationReport& rep);
std::string render_report_json(const VerificationReport& rep);

}  // namespace cogrowth
