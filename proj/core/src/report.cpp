#include "dpchroma/report.hpp"

#include "json.hpp"

namespace dpchroma {

void CheckReport::check(std::string statement, std::string bound, std::string actual, bool pass) {
    entries.push_back(CheckEntry{std::move(statement), std::move(bound), std::move(actual), pass, false});
}

void CheckReport::skip(std::string statement, std::string reason) {
    entries.push_back(CheckEntry{std::move(statement), "", std::move(reason), true, true});
}

bool CheckReport::passed() const {
    for (const auto& e : entries)
        if (!e.skipped && !e.pass) return false;
    return true;
}

std::size_t CheckReport::failures() const {
    std::size_t n = 0;
    for (const auto& e : entries)
        if (!e.skipped && !e.pass) ++n;
    return n;
}

std::string report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["pass"] = r.passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json c;
        c["statement"] = e.statement;
        if (e.skipped) {
            c["skipped"] = true;
            c["reason"] = e.actual_value;
        } else {
            c["bound_value"] = e.bound_value;
            c["actual_value"] = e.actual_value;
            c["pass"] = e.pass;
        }
        j["checks"].push_back(std::move(c));
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

} // namespace dpchroma
