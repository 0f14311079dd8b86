#pragma once
// Distribution coefficient vectors D, A, V, E, Gamma computed by three
// independent paths: brute-force enumeration of S_n, the insertion
// recurrences, and the closed-form formulas. All coefficients are exact
// unbounded integers; the paths are kept independent so they can act as
// evidence against each other.

#include <string>
#include <utility>
#include <vector>

#include "permstat/bigint.hpp"
#include "permstat/set_spec.hpp"
#include "permstat/stats.hpp"

namespace permstat {

struct Distribution {
    int n = 0;
    std::string stat;             // textual StatId this row tabulates
    std::vector<Bigint> coeffs;   // indexed by statistic value s = 0..n

    Bigint at(int s) const {
        return (s >= 0 && s < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(s)]
                                                               : Bigint(0);
    }
    bool same_coeffs(const Distribution& o) const { return coeffs == o.coeffs; }
    bool operator==(const Distribution&) const = default;
};

enum class Method { Brute, Recurrence, ClosedForm };

// Requested closed form does not exist for these parameters.
class NoClosedForm : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BruteOptions {
    int cap = 11;          // refuse enumeration beyond this n
    int parallelism = 1;   // worker threads for the S_n sweep
};

// coeffs[s] = |{sigma in S_n : stat(sigma) = s}| by direct enumeration.
Distribution dist_brute(const StatId& stat, int n, const BruteOptions& opts = {});

Distribution dist_D_recurrence(const SetSpec& x, const SetSpec& y, int n);
Distribution dist_A_recurrence(const SetSpec& x, const SetSpec& y, int n);
Distribution dist_V_recurrence(const SetSpec& x, const SetSpec& y, int n);

Distribution dist_V_formula(const SetSpec& x, const SetSpec& y, int n);
// Closed form for A^{X,X}; the caller's Y must agree with X on [n].
Distribution dist_AXX_formula(const SetSpec& x, int n);
Distribution dist_D_hr1(const SetSpec& x, const SetSpec& y, int n);
Distribution dist_D_hr2(const SetSpec& x, const SetSpec& y, int n);

// E^{X,Y}: Brute evaluates exc directly; Recurrence and ClosedForm delegate
// to the D engines with the sets swapped (E^{X,Y} = D^{Y,X}).
Distribution dist_E(const SetSpec& x, const SetSpec& y, int n, Method method,
                    const BruteOptions& opts = {});

// Gamma closed form; requires X, Y to partition [n] (HypothesisError else).
Distribution dist_gamma_formula(const SetSpec& x, const SetSpec& y, int n);

// ---- CLI-facing dispatch -------------------------------------------------

enum class Poly { D, A, V, E, Gamma };
Poly parse_poly(const std::string& name);  // "D" | "A" | "V" | "E" | "Gamma"
const char* poly_name(Poly p);

// Computes the requested method(s) for one polynomial family. method is
// "brute" | "rec" | "formula" | "all"; "all" returns every method available
// for these parameters, labeled. Unavailable explicit requests throw
// NoClosedForm with a message naming the gap.
std::vector<std::pair<std::string, Distribution>> compute_poly(
    Poly poly, const SetSpec& x, const SetSpec& y, int n,
    const std::string& method, const BruteOptions& opts = {});

}  // namespace permstat
