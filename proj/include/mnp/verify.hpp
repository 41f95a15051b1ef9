#pragma once

#include "mnp/params.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mnp {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    GroupParams params;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string to_text() const;
    std::string to_json() const;
};

struct VerifyConfig {
    std::optional<GroupParams> params;
    std::uint64_t seed = 1;
    int samples = 20;
};

const std::vector<std::string>& verify_suites();

/// Default parameters for a suite when none are given.
GroupParams default_suite_params(const std::string& suite);

/// Runs the pinned golden checks and property samples of one suite.
VerifyReport verify_paper(const std::string& suite, const VerifyConfig& config);

}  // namespace mnp
