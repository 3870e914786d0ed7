#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftedcodes/graph.hpp"
#include "liftedcodes/lifted.hpp"

namespace liftedcodes {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Everything cmd verify establishes for one (q, m, r): the measured and
/// closed-form intersection arrays plus per-claim pass/fail outcomes.
struct VerifyReport {
    std::uint64_t q = 0;
    unsigned m = 0;
    unsigned r = 0;
    std::uint64_t n = 0;
    unsigned rho = 0;
    std::string field;
    IntersectionArray closed_form;
    IntersectionArray measured;
    bool match = false;
    std::vector<CheckOutcome> checks;
    bool all_pass = false;
};

VerifyReport run_verify(std::uint64_t q, unsigned m, unsigned r, const Caps& caps = {},
                        std::uint64_t seed = 1);

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Names of the reproduction criteria, in run order.
const std::vector<std::string>& criterion_names();

/// Runs the reproduction criteria (all of them for an empty filter). Unknown
/// names in `only` throw std::invalid_argument. Criteria with a stated time
/// budget fail when they exceed it.
std::vector<CriterionResult> run_criteria(const std::vector<std::string>& only = {},
                                          const Caps& caps = {});

}  // namespace liftedcodes
