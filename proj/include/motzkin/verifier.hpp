#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motzkin/builders.hpp"
#include "motzkin/formulas.hpp"
#include "motzkin/word.hpp"

namespace motzkin {

struct Discrepancy {
    std::string location;  // e.g. "n=5 k=3" or "x^5 monomial q^9"
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    std::string scope;  // n range or order the check covered
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    double wall_ms = 0;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    /// Deterministic JSON; timing fields excluded unless requested.
    std::string to_json(bool include_timing = false, int indent = 2) const;
};

/// Names accepted by run_suite's selection, in execution order:
/// counting, pick, stats-consistency, bijections, series-vs-brute,
/// functional-equations, triangles, trinomial-height, oeis.
const std::vector<std::string>& suite_check_names();

/// Run the cross-check suite up to exhaustive length n_max (functional
/// equations run at order min(n_max, 10)). Empty selection = every check.
CheckReport run_suite(int n_max, const std::set<std::string>& selection = {});

/// Exact distribution of a statistic over all words of length n;
/// stat is one of area, sper, inter, last.
std::map<long long, long long> stat_histogram(int n, const std::string& stat,
                                              const EnumLimits& limits = {});

// Building blocks, exposed so tests can feed perturbed data through the same
// comparisons the suite uses.
CheckResult check_series_equal(const std::string& name, const std::string& scope,
                               const TruncSeries& actual, const TruncSeries& expected);
CheckResult check_table_rows(const std::string& name, const StatTable& actual,
                             const StatTable& expected, int n_max);
CheckResult check_sequence(const std::string& name, const std::vector<BigInt>& actual,
                           const std::vector<BigInt>& expected, int first_index);

}  // namespace motzkin
