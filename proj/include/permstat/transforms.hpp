#pragma once
// The explicit bijections: Foata's first transformation and its inverse, the
// two insertion operators (gap insertion for adjacency, the I-procedure for
// value), slot labelings with per-locus effect classes, and the inductive
// matched-insertion bijection Theta transporting adj to val.

#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/set_spec.hpp"
#include "permstat/stats.hpp"

namespace permstat {

// Cycle form (largest-last, increasing largest), each cycle reversed, then
// parentheses erased.
Permutation foata(const Permutation& w);
Permutation foata_inverse(const Permutation& tau);

// I^(i): replace sigma_i by n+1 and move the old sigma_i to the end;
// I^(n+1) appends n+1. Bijection S_n x [n+1] -> S_{n+1}.
Permutation insert_I(const Permutation& sigma, int locus);

// Insert n+1 into gap `locus` (1 = before the first entry, n+1 = after the
// last). Bijection S_n x [n+1] -> S_{n+1}.
Permutation insert_gap(const Permutation& sigma, int locus);

enum class Effect { Up, Down, Unchanged };

struct Slot {
    int locus;      // 1..n+1
    int label;      // 1..n+1, pairs-first labeling (see label_* functions)
    Effect effect;  // statistic change if n+1 is inserted at this locus
};

struct SlotLabeling {
    std::vector<Slot> slots;  // in locus order
    int count(Effect e) const;
};

// Gap loci of sigma for adjacency insertion of n+1. Labels follow the text:
// gaps inside an (X,Y)-adjacent pair first, left to right, then the
// remaining gaps left to right. Requires X, Y disjoint on [n+1].
SlotLabeling label_adjacency_slots(const Permutation& sigma, const SetSpec& x,
                                   const SetSpec& y);

// Position loci 1..n plus the terminal locus n+1 for the I-procedure.
// Labels: positions i with i in X and tau_i in Y first, left to right, then
// the remaining loci left to right. Requires X, Y disjoint on [n+1].
SlotLabeling label_value_slots(const Permutation& tau, const SetSpec& x,
                               const SetSpec& y);

struct BijectionTable {
    int n = 0;
    StatId source_stat, target_stat;
    // sorted by source permutation
    std::vector<std::pair<Permutation, Permutation>> forward;
};

// The inductive bijection with adj_{X,Y}(sigma) = val_{X,Y}(Theta(sigma)),
// built from Theta_1 = id by matching insertion loci of equal effect class
// (changing loci first, in locus order — the text's rule in the case it
// spells out, applied uniformly to the other cases). Requires X, Y disjoint.
BijectionTable build_theta(int n, const SetSpec& x, const SetSpec& y, int cap = 11);

}  // namespace permstat
