#pragma once
#include "scy/config.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace scy {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> checks;  // "ok ..." or "FAIL ..."
    double seconds = 0;
    double budget_seconds = 0;
};

struct AcceptanceOptions {
    Config config;
    uint64_t property_seed = 20240601;
    int property_iterations = 1000;
    int equivariance_samples = 40;
    std::vector<int> only;  // criterion ids; empty runs all
};

// Runs criteria 1..10 in order; progress receives each result as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress = {});
std::string format_result_line(const CriterionResult& r);

}  // namespace scy
