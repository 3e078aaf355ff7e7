#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinorb/weight.hpp"

namespace spinorb {

// Every dominant K-type of Spin(a) x Spin(b) with doubled coordinates in [-bound, bound].
std::vector<KType> ktype_window(int a, int b, int bound);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::int64_t checked = 0;
    std::int64_t millis = 0;
    std::int64_t budget_millis = 0;  // 0 when the criterion has no time limit
    std::vector<std::string> details;
};

int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace spinorb
