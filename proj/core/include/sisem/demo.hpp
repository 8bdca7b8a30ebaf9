#pragma once

#include <string>
#include <vector>

#include "sisem/builders.hpp"

namespace sisem {

// One gallery reproduction row: classification, certificate re-validation
// and the oracle cross-check.
struct DemoRow {
    std::string name;
    Ternary expected_si = Ternary::Inconclusive;
    Ternary got_si = Ternary::Inconclusive;
    Ternary expected_simple = Ternary::Inconclusive;
    Ternary got_simple = Ternary::Inconclusive;
    std::string rule;
    std::string certificate_tag;
    bool certificate_valid = false;
    bool oracle_agrees = false;
    bool pass = false;
};

struct DemoReport {
    std::vector<DemoRow> rows;
    bool all_pass = true;
    double seconds = 0.0;
};

// Runs the whole gallery (or a single entry) and cross-checks every verdict
// against the bounded search. An expected verdict met with INCONCLUSIVE
// counts as a failure.
DemoReport run_demo(const Tolerance& tol = {}, const OracleBounds& budget = {},
                    const std::string& only = "");

std::string format_demo_table(const DemoReport& report);

}  // namespace sisem
