#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quivq {

struct AcceptanceItem {
    int criterion = 0;
    std::string tag;  // mckay, cb, sra, comoment, maffei, multiplicity, params, reflect, slodowy
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    /// Runs only items whose tag or name contains the filter; empty runs everything.
    std::string filter;
    std::uint64_t seed = 0;
    /// Negative control: the McKay items see a character table with one entry negated.
    bool corrupt_table = false;
};

struct CriterionResult {
    int criterion = 0;
    std::string title;
    double seconds = 0;
    double budget = 0;
    std::vector<AcceptanceItem> items;

    /// Every item passed within the time budget.
    [[nodiscard]] bool pass() const;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace quivq
