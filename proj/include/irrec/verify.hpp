#pragma once

#include <string>
#include <vector>

#include "irrec/rational.hpp"

namespace irrec {

struct CheckRecord {
    std::string id;
    std::string description;
    std::string status;  // "pass" | "fail" | "report-only" | "discrepancy"
    std::string lhs;
    std::string rhs;
    std::string anchor;  // fact identifier
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;

    int hard_failures() const {
        int k = 0;
        for (const auto& c : checks)
            if (c.status == "fail") ++k;
        return k;
    }
    int passes() const {
        int k = 0;
        for (const auto& c : checks)
            if (c.status == "pass") ++k;
        return k;
    }
    bool has_status(const std::string& s) const {
        for (const auto& c : checks)
            if (c.status == s) return true;
        return false;
    }
    std::string render_text(bool verbose) const;
    std::string render_json() const;
};

namespace verify {

struct Options {
    long dmax = 6;     // oracle sweep bound
    int threads = 1;
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const Options& opt = {});

/// All acceptance criteria, numbered; each report carries the checks of one
/// criterion. Runs everything regardless of failures.
std::vector<std::pair<int, Report>> run_acceptance(const Options& opt = {});

}  // namespace verify

}  // namespace irrec
