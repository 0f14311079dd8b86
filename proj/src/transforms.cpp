#include "permstat/transforms.hpp"

#include <algorithm>
#include <map>

namespace permstat {

Permutation foata(const Permutation& w) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(w.size()));
    for (const auto& cyc : to_cycles(w))
        out.insert(out.end(), cyc.rbegin(), cyc.rend());
    return Permutation(std::move(out));
}

Permutation foata_inverse(const Permutation& tau) {
    // Each written segment starts at a left-to-right maximum (the cycle's
    // largest element, written first after the reversal); undo by splitting
    // there and reversing each segment back into a canonical cycle.
    CycleForm cycles;
    for (int i = 1; i <= tau.size(); ++i) {
        int v = tau.at(i);
        if (cycles.empty() || v > cycles.back().front())
            cycles.push_back({v});
        else
            cycles.back().push_back(v);
    }
    for (auto& c : cycles)
        std::reverse(c.begin(), c.end());
    return from_cycles(cycles);
}

Permutation insert_I(const Permutation& sigma, int locus) {
    const int n = sigma.size();
    if (locus < 1 || locus > n + 1)
        throw ParseError("insertion locus " + std::to_string(locus) +
                         " out of range 1.." + std::to_string(n + 1));
    std::vector<int> e = sigma.entries();
    if (locus == n + 1) {
        e.push_back(n + 1);
    } else {
        int displaced = e[static_cast<size_t>(locus) - 1];
        e[static_cast<size_t>(locus) - 1] = n + 1;
        e.push_back(displaced);
    }
    return Permutation(std::move(e));
}

Permutation insert_gap(const Permutation& sigma, int locus) {
    const int n = sigma.size();
    if (locus < 1 || locus > n + 1)
        throw ParseError("gap locus " + std::to_string(locus) + " out of range 1.." +
                         std::to_string(n + 1));
    std::vector<int> e = sigma.entries();
    e.insert(e.begin() + (locus - 1), n + 1);
    return Permutation(std::move(e));
}

int SlotLabeling::count(Effect e) const {
    int c = 0;
    for (const auto& s : slots)
        c += s.effect == e ? 1 : 0;
    return c;
}

namespace {

void check_disjoint(const SetSpec& x, const SetSpec& y, int n,
                    const std::string& who) {
    if (!disjoint_on(x, y, n))
        throw HypothesisError(who + " requires X ∩ Y = ∅ on [" + std::to_string(n) +
                              "] (Theorem V=A hypothesis); got X = " + x.to_string() +
                              ", Y = " + y.to_string());
}

Effect effect_of(int delta) {
    return delta > 0 ? Effect::Up : delta < 0 ? Effect::Down : Effect::Unchanged;
}

SlotLabeling finish_labels(std::vector<Slot> slots,
                           const std::vector<char>& is_pair_locus) {
    // The printed labels: pair loci first, left to right, then the rest.
    int label = 0;
    for (auto& s : slots)
        if (is_pair_locus[static_cast<size_t>(s.locus)])
            s.label = ++label;
    for (auto& s : slots)
        if (!is_pair_locus[static_cast<size_t>(s.locus)])
            s.label = ++label;
    return SlotLabeling{std::move(slots)};
}

}  // namespace

SlotLabeling label_adjacency_slots(const Permutation& sigma, const SetSpec& x,
                                   const SetSpec& y) {
    const int n = sigma.size(), v = n + 1;
    check_disjoint(x, y, n + 1, "label_adjacency_slots");
    const bool vx = x.contains(v), vy = y.contains(v);
    std::vector<Slot> slots;
    std::vector<char> is_pair(static_cast<size_t>(n) + 2, 0);
    for (int g = 1; g <= n + 1; ++g) {
        // gap g sits between a = sigma_{g-1} and b = sigma_g
        const bool has_a = g > 1, has_b = g <= n;
        const bool ax = has_a && x.contains(sigma.at(g - 1));
        const bool by = has_b && y.contains(sigma.at(g));
        const int old_pair = (ax && by) ? 1 : 0;
        const int delta = (ax && vy ? 1 : 0) + (vx && by ? 1 : 0) - old_pair;
        is_pair[static_cast<size_t>(g)] = static_cast<char>(old_pair);
        slots.push_back(Slot{g, 0, effect_of(delta)});
    }
    return finish_labels(std::move(slots), is_pair);
}

SlotLabeling label_value_slots(const Permutation& tau, const SetSpec& x,
                               const SetSpec& y) {
    const int n = tau.size(), v = n + 1;
    check_disjoint(x, y, n + 1, "label_value_slots");
    const bool vx = x.contains(v), vy = y.contains(v);
    std::vector<Slot> slots;
    std::vector<char> is_pair(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) {
        const bool ix = x.contains(i), ty = y.contains(tau.at(i));
        const int old_pair = (ix && ty) ? 1 : 0;
        // I^(i) puts n+1 at position i and moves tau_i to position n+1
        const int delta = (ix && vy ? 1 : 0) - old_pair + (vx && ty ? 1 : 0);
        is_pair[static_cast<size_t>(i)] = static_cast<char>(old_pair);
        slots.push_back(Slot{i, 0, effect_of(delta)});
    }
    // terminal locus: n+1 lands at position n+1; X, Y disjoint makes this 0
    slots.push_back(Slot{n + 1, 0, effect_of((vx && vy) ? 1 : 0)});
    return finish_labels(std::move(slots), is_pair);
}

BijectionTable build_theta(int n, const SetSpec& x, const SetSpec& y, int cap) {
    check_disjoint(x, y, n, "build_theta");
    if (n < 1)
        throw ParseError("build_theta needs n >= 1");
    if (n > cap)
        throw EnumerationCapError("refusing to build Theta over S_" +
                                  std::to_string(n) + ": cap is " + std::to_string(cap));
    std::map<Permutation, Permutation> table;
    table.emplace(Permutation::identity(1), Permutation::identity(1));
    for (int m = 1; m < n; ++m) {
        std::map<Permutation, Permutation> bigger;
        for (const auto& [sigma, tau] : table) {
            const SlotLabeling la = label_adjacency_slots(sigma, x, y);
            const SlotLabeling lv = label_value_slots(tau, x, y);
            // Match loci of equal effect class, changing classes first —
            // the insertion-recurrence coefficients guarantee the counts
            // agree; bail out loudly if they ever do not.
            for (Effect e : {Effect::Up, Effect::Down, Effect::Unchanged}) {
                std::vector<int> ga, gv;
                for (const auto& s : la.slots)
                    if (s.effect == e)
                        ga.push_back(s.locus);
                for (const auto& s : lv.slots)
                    if (s.effect == e)
                        gv.push_back(s.locus);
                if (ga.size() != gv.size())
                    throw std::logic_error(
                        "slot class counts differ at sigma = " + sigma.to_string() +
                        ": the matched-insertion construction is broken");
                for (size_t r = 0; r < ga.size(); ++r)
                    bigger.emplace(insert_gap(sigma, ga[r]), insert_I(tau, gv[r]));
            }
        }
        table = std::move(bigger);
    }
    BijectionTable out;
    out.n = n;
    out.source_stat = StatId::adj(x, y);
    out.target_stat = StatId::val(x, y);
    out.forward.assign(table.begin(), table.end());
    return out;
}

}  // namespace permstat
