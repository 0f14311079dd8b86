#pragma once

#include <string>
#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/config.hpp"

namespace permstat {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;         // theorem/identity failures
    long long counterexamples = 0;  // conjecture counterexamples
    std::vector<std::string> lines{};

    bool passed() const { return failures == 0 && counterexamples == 0; }
};

// Closed-form row for Table-1 group g (1..6) at permutation length m.
std::vector<Bigint> group_closed_row(int g, int m);
// Table-1 member indices of group g.
const std::vector<int>& group_members(int g);

// suite: table1 | identities | bijections | gamma | conjectures | all
std::vector<SuiteResult> run_suites(const std::string& suite, int max_n,
                                    const Config& cfg = {});

// 0 = pass; 1 = theorem/identity failure; 2 = conjecture counterexample.
// A failure outranks a counterexample when both occur.
int exit_code_for(const std::vector<SuiteResult>& results);

}  // namespace permstat
