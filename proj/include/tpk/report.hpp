#ifndef TPK_REPORT_HPP
#define TPK_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace tpk {

struct CheckResult {
    std::string id;
    std::string status;   // pass | fail | skip
    std::string residual; // "0", "terms=..,maxdeg=..", or a float norm
    nlohmann::json witness; // serialized input on failure, null otherwise

    static CheckResult pass(std::string id, std::string residual = "0");
    static CheckResult fail(std::string id, std::string residual,
                            nlohmann::json witness = nullptr);
    static CheckResult skip(std::string id, std::string why);
};

// Structured pass/fail record; deterministic given (inputs, seed) except
// for the timing field. Checks are sorted by id before serialization.
struct VerificationReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double timing_ms = 0.0;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

} // namespace tpk

#endif
