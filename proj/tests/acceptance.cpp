#include <cstdio>

#include "spinorb/verify.hpp"

using namespace spinorb;

int main() {
    int failed = 0;
    for (int id = 1; id <= criterion_count(); ++id) {
        CriterionResult r = run_criterion(id);
        std::printf("%s %2d %s (%lld checks, %lld ms)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    static_cast<long long>(r.checked), static_cast<long long>(r.millis));
        for (const auto& d : r.details) std::printf("       %s\n", d.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
