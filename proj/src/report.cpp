#include "tpk/report.hpp"

#include <algorithm>
#include <sstream>

namespace tpk {

CheckResult CheckResult::pass(std::string id, std::string residual) {
    return {std::move(id), "pass", std::move(residual), nullptr};
}

CheckResult CheckResult::fail(std::string id, std::string residual,
                              nlohmann::json witness) {
    return {std::move(id), "fail", std::move(residual), std::move(witness)};
}

CheckResult CheckResult::skip(std::string id, std::string why) {
    return {std::move(id), "skip", std::move(why), nullptr};
}

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (c.status == "fail")
            return false;
    return true;
}

nlohmann::json VerificationReport::to_json() const {
    std::vector<CheckResult> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sorted) {
        nlohmann::json e = {{"id", c.id}, {"status", c.status}, {"residual", c.residual}};
        if (!c.witness.is_null())
            e["witness"] = c.witness;
        arr.push_back(e);
    }
    return {{"suite", suite},
            {"seed", seed},
            {"status", passed() ? "pass" : "fail"},
            {"checks", arr},
            {"timing_ms", timing_ms}};
}

std::string VerificationReport::to_text() const {
    std::vector<CheckResult> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    std::ostringstream out;
    out << "suite " << suite << " (seed " << seed << ")\n";
    for (const auto& c : sorted) {
        std::string tag = c.status == "pass" ? "PASS" : (c.status == "skip" ? "SKIP" : "FAIL");
        out << "[" << tag << "] " << c.id;
        if (!c.residual.empty())
            out << " (residual " << c.residual << ")";
        out << "\n";
    }
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace tpk
