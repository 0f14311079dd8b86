#pragma once
// Per-permutation statistics: the four (X,Y)-families des/adj/val/exc, the
// position-set statistic gamma, the sixteen named parity statistics S1..S16,
// the increasing-prefix statistic S17, and the pair classification T1..T3.

#include <array>
#include <string>

#include "permstat/permutation.hpp"
#include "permstat/set_spec.hpp"

namespace permstat {

// The five statistics that take (X,Y) set parameters.
enum class FamilyKind { Des, Adj, Val, Exc, Gamma };

struct StatId {
    enum class Kind { Family, Named, T };

    Kind kind = Kind::Family;
    FamilyKind family = FamilyKind::Des;
    SetSpec x = SetSpec::all(), y = SetSpec::all();
    int index = 0;  // 1..17 for Named, 1..3 for T

    static StatId des(SetSpec x, SetSpec y) { return family_id(FamilyKind::Des, x, y); }
    static StatId adj(SetSpec x, SetSpec y) { return family_id(FamilyKind::Adj, x, y); }
    static StatId val(SetSpec x, SetSpec y) { return family_id(FamilyKind::Val, x, y); }
    static StatId exc(SetSpec x, SetSpec y) { return family_id(FamilyKind::Exc, x, y); }
    static StatId gamma(SetSpec x, SetSpec y) { return family_id(FamilyKind::Gamma, x, y); }
    static StatId family_id(FamilyKind f, SetSpec x, SetSpec y);
    static StatId named(int i);  // s1..s17
    static StatId t(int i);      // t1..t3

    // Syntax: `des:X;Y`, `adj:X;Y`, `val:X;Y`, `exc:X;Y`, `gamma:X;Y` with
    // X, Y in set-spec syntax; `s1`..`s17`; `t1`..`t3`.
    static StatId parse(const std::string& text);
    std::string to_string() const;
};

int eval_des(const Permutation& p, const SetSpec& x, const SetSpec& y);
int eval_adj(const Permutation& p, const SetSpec& x, const SetSpec& y);
int eval_val(const Permutation& p, const SetSpec& x, const SetSpec& y);
int eval_exc(const Permutation& p, const SetSpec& x, const SetSpec& y);
int eval_gamma(const Permutation& p, const SetSpec& x, const SetSpec& y);

// Largest i >= 0 such that the positions of values 1..i increase.
int eval_s17(const Permutation& p);

// Classification of adjacent pairs: t1 = odd-top descents that are not
// (odd,odd) pairs, t2 = (odd,odd) pairs that are not descents, t3 = both.
// Hence t1+t3 = S10 and t2+t3 = S12.
std::array<int, 3> eval_t_stats(const Permutation& p);

int eval_stat(const Permutation& p, const StatId& id);

// The Table-1 (X,Y)-family instance that S_i (1 <= i <= 16) abbreviates.
// eval_stat on StatId::named(i) is implemented independently (direct parity
// tests); agreement with these instances is a tested property.
StatId table1_family(int i);

}  // namespace permstat
