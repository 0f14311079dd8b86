#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/set_spec.hpp"
#include "permstat/stats.hpp"

namespace permstat {

// Exhaustive tabulation of a statistic tuple over S_n.
struct JointDistribution {
    int n = 0;
    std::vector<StatId> stats;
    std::map<std::vector<int>, long long> counts;

    long long total() const;
    // Single-statistic marginal onto stats[index], as a coefficient row.
    std::vector<long long> marginal(std::size_t index) const;
};

JointDistribution joint_dist(int n, const std::vector<StatId>& stats, int cap = 11);

struct ConjectureResult {
    std::string name;  // "conjecture1" | "conjecture2"
    int n = 0;
    bool holds = true;
    // First differing tuple in lexicographic order, when the maps disagree.
    std::optional<std::vector<int>> witness;
    std::size_t lhs_table_size = 0;
    std::size_t rhs_table_size = 0;
};

// (S10, S12, S17) vs (S12, S10, S17) as count maps.
ConjectureResult test_conjecture1(int n, int cap = 11);
// (T1, T2, T3, S17) vs (T2, T1, T3, S17) as count maps.
ConjectureResult test_conjecture2(int n, int cap = 11);

// Enumerated gamma distribution vs the closed form, coefficientwise.
// Throws HypothesisError when (X, Y) do not partition [n].
bool test_gamma_theorem(const SetSpec& x, const SetSpec& y, int n, int cap = 11);

// One insertion that raises gamma by exactly 2.
struct JumpInstance {
    Permutation sigma;
    int locus = 0;  // i in the replace-and-append insertion
    int before = 0;
    int after = 0;
};

// Scans every sigma in S_n and every insertion locus, returning the
// instances where gamma jumps by +2. Also enforces the |delta| <= 2 bound.
std::vector<JumpInstance> gamma_jump_demo(int n, const SetSpec& x, const SetSpec& y,
                                          int cap = 11);

// {"n":..., "holds":..., "witness":..., "table_sizes":..., "even_odd_split":...}
std::string conjecture_report_json(const ConjectureResult& r);
// Aggregated multi-n report; even_odd_split partitions the verified n by parity.
std::string conjecture_report_json(const std::vector<ConjectureResult>& results);

}  // namespace permstat
