#pragma once

#include <string>
#include <vector>

namespace dpchroma {

/// One checked statement: the bound (or expected value), what was actually
/// observed, and whether the check passed. Skipped entries carry an
/// explicit "not checked" status and do not fail a report.
struct CheckEntry {
    std::string statement;
    std::string bound_value;
    std::string actual_value;
    bool pass = false;
    bool skipped = false;
};

struct CheckReport {
    std::string name;
    std::vector<CheckEntry> entries;
    std::vector<std::string> notes;

    void check(std::string statement, std::string bound, std::string actual, bool pass);
    void skip(std::string statement, std::string reason);

    bool passed() const;
    std::size_t failures() const;
};

std::string report_to_json(const CheckReport& r);

} // namespace dpchroma
