// Acceptance suite: runs every reproduction criterion at its stated exact
// tolerance and prints one pass/fail line per criterion. Exits nonzero when
// anything fails.

#include <cstdio>
#include <exception>

#include "liftedcodes/suite.hpp"

int main() {
    using namespace liftedcodes;
    try {
        const auto results = run_criteria();
        if (results.size() != criterion_names().size()) {
            std::printf("[FAIL] suite ran %zu of %zu criteria\n", results.size(),
                        criterion_names().size());
            return 1;
        }
        bool all = true;
        for (const auto& r : results) {
            std::printf("[%s] %-20s %8.3fs  %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds, r.detail.c_str());
            all = all && r.pass;
        }
        std::printf("%s\n", all ? "acceptance: all criteria passed"
                                : "acceptance: some criteria FAILED");
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        std::printf("[FAIL] suite aborted: %s\n", e.what());
        return 1;
    }
}
