#pragma once

#include <string>
#include <vector>

namespace halg {

// Three-valued check outcome.  Indeterminate means the window was too small
// to evaluate the law, which is NOT a failure: the law holds on everything
// the window could see.
enum class CheckStatus { Pass, Fail, Indeterminate };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // empty when passing
};

struct Report {
    std::vector<CheckResult> checks;

    void pass(const std::string& name) { checks.push_back({name, CheckStatus::Pass, ""}); }
    void fail(const std::string& name, const std::string& witness) {
        checks.push_back({name, CheckStatus::Fail, witness});
    }
    void indeterminate(const std::string& name, const std::string& witness) {
        checks.push_back({name, CheckStatus::Indeterminate, witness});
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    bool any_indeterminate() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Indeterminate) return true;
        return false;
    }
    // First failing check, if any.
    const CheckResult* first_fail() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return &c;
        return nullptr;
    }
};

}  // namespace halg
