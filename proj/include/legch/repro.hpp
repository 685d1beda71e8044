#pragma once

#include <array>
#include <string>
#include <vector>

#include "legch/poly.hpp"

namespace legch::repro {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    /// Wall-time budget in seconds; 0 when the criterion has none.
    double budget = 0;
};

CriterionResult trefoil_ground_truth();
CriterionResult fibonacci_lemma();
CriterionResult even_class_criterion();
CriterionResult connected_sum_algebra();
CriterionResult tau_certificate();
CriterionResult monodromy_verdicts();
CriterionResult holonomy_rules();
CriterionResult property_suite(int cases = 1000);

/// All criteria in order.
std::vector<CriterionResult> run_all();

/// "PASS [3] name (0.012 s): detail"
std::string format(const CriterionResult& r);

struct FibonacciRow {
    int n = 0;
    std::array<Count, 4> lengths;
    std::array<std::uint64_t, 4> expected{};
    bool match = false;
};

/// Path-matrix entry lengths against an independent Fibonacci recurrence.
std::vector<FibonacciRow> fibonacci_table(int max_n);

/// Multisets of {3, 7, 9} with 1 to 3 elements, each sorted ascending.
std::vector<std::vector<int>> summand_multisets();

}  // namespace legch::repro
