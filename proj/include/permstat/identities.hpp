#pragma once
// Exact verification of the six identity families tying product-form
// distribution coefficients of residue-class statistics to alternating
// sums. Every identity is evaluated three ways per grid point:
//   - printed form: both sides exactly as displayed in the text (these carry
//     known misprints and can even be undefined at boundary points — they
//     are reported, never silently repaired);
//   - theorem form: the left side recomputed from the proven closed forms
//     (V respectively A^{X,X}) on the actual sets;
//   - oracle: the recurrence engine, plus direct enumeration where in reach.
// The hard correctness gate is theorem form == oracle; printed-form
// discrepancies are tallied.

#include <optional>
#include <string>
#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/distribution.hpp"
#include "permstat/set_spec.hpp"

namespace permstat {

enum class IdentityCase { Case1, Case2, Case3, CaseI, CaseII, CaseA, CaseB };

const char* case_name(IdentityCase c);               // "case1" ... "caseB"
IdentityCase parse_case(const std::string& name);

// One grid point. Cases 1-3 concern X = i+kN, Y = j+kN with 0 <= i < j < k;
// cases I/II (value) and A/B (adjacency) concern X = Y = i+kN. The length is
// m = kn + t; s indexes the coefficient. Legal t ranges per case:
//   case1: 0 <= t < i      case2: i <= t < j     case3: j <= t <= k-1
//   caseI: 0 <= t < i      caseII: i <= t <= k-1
//   caseA: 0 <= t < i-1    caseB: i <= t < k-1
struct IdentityPoint {
    IdentityCase family;
    int k = 2, i = 0, j = 0, t = 0, n = 0, s = 0;
};

// Throws ParseError naming the violated case header if the point is out of
// range.
void validate_point(const IdentityPoint& pt);

// The (X, Y) sets an identity point talks about.
std::pair<SetSpec, SetSpec> identity_sets(const IdentityPoint& pt);

// Printed forms; nullopt when the displayed expression is undefined at this
// point (negative factorial).
std::optional<Bigint> printed_lhs(const IdentityPoint& pt);
std::optional<Bigint> printed_rhs(const IdentityPoint& pt);

// Theorem-form left side: the proven closed form on the actual sets at
// length m = kn+t, coefficient s.
Bigint theorem_lhs(const IdentityPoint& pt);

struct IdentityReport {
    IdentityPoint point;
    long long m = 0;
    std::optional<Bigint> printed_lhs, printed_rhs;
    Bigint theorem_lhs;
    Bigint oracle_rhs;                  // recurrence engine value
    std::optional<Bigint> derived_rhs;  // HR1 over the derived (A,B), when known
    bool brute_checked = false;         // enumeration also consulted
    bool gate_ok = false;               // theorem form == every oracle consulted
    bool printed_eq = false;            // printed lhs == printed rhs (both defined)
    bool theorem_vs_printed = false;    // theorem lhs == printed rhs (defined)
};

// brute_max: additionally compare against dist_brute when m <= brute_max
// (pass -1 to skip enumeration).
IdentityReport verify_identity(const IdentityPoint& pt, int brute_max = 8,
                               int cap = 11);

std::vector<IdentityPoint> legal_points(IdentityCase family, int k, int n_max,
                                        int s_extra = 1);

struct FamilyTally {
    std::string family;
    long long points = 0;
    long long printed_eq = 0;      // printed lhs == printed rhs
    long long theorem_eq = 0;      // theorem lhs == printed rhs
    long long gate_failures = 0;   // theorem form != oracle (must stay 0)
    long long derived_points = 0;  // points with a derived (A,B) pairing
    long long derived_failures = 0;
    long long brute_points = 0;    // points where enumeration was consulted
};

struct SweepOptions {
    int k_min = 2, k_max = 5;
    int n_max = 4;
    int brute_max = -1;  // compare against enumeration for m <= brute_max
    int cap = 11;
    bool keep_reports = false;
};

struct SweepResult {
    std::vector<FamilyTally> tallies;        // one per family, fixed order
    std::vector<IdentityReport> reports;     // only when keep_reports
    long long total_points = 0, total_gate_failures = 0, total_derived_failures = 0;
};

SweepResult sweep(const SweepOptions& opts = {});

// CSV line `case,k,i,j,t,n,s,lhs,rhs,equal` with lhs = theorem form and
// rhs = recurrence oracle.
std::string report_csv_line(const IdentityReport& r);

}  // namespace permstat
