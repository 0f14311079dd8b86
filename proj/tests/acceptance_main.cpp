// Acceptance runner: each numbered criterion is one self-contained check
// with a hard runtime budget where the contract sets one. Run with the
// criterion number as the only argument ("acceptance 3"), or with no
// arguments to run all nine.
//
// Exit codes: 0 all selected criteria pass; 1 any criterion fails;
// 2 a conjecture counterexample was found (criterion 8) with no other
// failure.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frozen_vectors.hpp"
#include "permstat/config.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/distribution.hpp"
#include "permstat/identities.hpp"
#include "permstat/transforms.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {

struct Outcome {
    bool pass = true;
    bool counterexample = false;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok)
            fail(why);
    }
};

std::vector<SetSpec> seven_specs() {
    std::vector<SetSpec> out;
    for (const char* text : {"all", "even", "odd", "res:1,3", "res:2,3",
                             "set:2,3,4,6,7,9", "set:1,4,8"})
        out.push_back(SetSpec::parse(text));
    return out;
}

BruteOptions parallel_opts() { return BruteOptions{11, Config{}.workers()}; }

// 1. Worked descent example: coefficient 2 at n = 6 equals 72 by all four
// computation paths.
Outcome criterion1() {
    Outcome r;
    auto x = SetSpec::parse("set:2,3,4,6,7,9");
    auto y = SetSpec::parse("set:1,4,8");
    auto brute = dist_brute(StatId::des(x, y), 6);
    auto rec = dist_D_recurrence(x, y, 6);
    auto hr1 = dist_D_hr1(x, y, 6);
    auto hr2 = dist_D_hr2(x, y, 6);
    r.require(brute.at(2) == 72, "brute coefficient at s=2 is not 72");
    r.require(rec.at(2) == 72, "recurrence coefficient at s=2 is not 72");
    r.require(hr1.at(2) == 72, "first alternating form at s=2 is not 72");
    r.require(hr2.at(2) == 72, "second alternating form at s=2 is not 72");
    r.require(brute.same_coeffs(rec) && brute.same_coeffs(hr1) &&
                  brute.same_coeffs(hr2),
              "four-way row agreement broken");
    return r;
}

// 2. Foata example with cycle trace, plus full round-trips over S_7.
Outcome criterion2() {
    Outcome r;
    auto w = Permutation::parse("61437258");
    r.require(cycles_to_string(to_cycles(w)) == "(34)(216)(57)(8)",
              "cycle trace of 61437258 is wrong");
    r.require(foata(w).to_string() == "43612758",
              "foata(61437258) != 43612758");
    long long checked = 0;
    enumerate_sn(7, 11, [&](const Permutation& p) {
        if (foata_inverse(foata(p)) == p && foata(foata_inverse(p)) == p)
            ++checked;
    });
    r.require(checked == 5040, "foata round-trip failed somewhere in S_7");
    return r;
}

// 3. Table regression: the 16 pinned values and the 6 equidistributed
// groups with their closed forms, n <= 8, single-threaded.
Outcome criterion3() {
    Outcome r;
    Config single;
    single.parallelism = 1;
    for (const SuiteResult& s : run_suites("table1", 8, single)) {
        r.require(s.failures == 0,
                  "suite " + s.name + ": " + std::to_string(s.failures) +
                      " failed check(s)");
        for (const std::string& line : s.lines)
            r.notes.push_back(line);
    }
    return r;
}

// 4. Triple agreement of every engine on the 7-spec grid, n <= 7.
Outcome criterion4() {
    Outcome r;
    const auto specs = seven_specs();
    const auto opts = parallel_opts();
    for (const auto& x : specs)
        for (const auto& y : specs)
            for (int n = 0; n <= 7; ++n) {
                const std::string at = " for (" + x.to_string() + ", " +
                                       y.to_string() + "), n=" + std::to_string(n);

                auto d = dist_brute(StatId::des(x, y), n, opts);
                r.require(d.same_coeffs(dist_D_recurrence(x, y, n)) &&
                              d.same_coeffs(dist_D_hr1(x, y, n)) &&
                              d.same_coeffs(dist_D_hr2(x, y, n)),
                          "D engines disagree" + at);

                auto v = dist_brute(StatId::val(x, y), n, opts);
                r.require(v.same_coeffs(dist_V_recurrence(x, y, n)) &&
                              v.same_coeffs(dist_V_formula(x, y, n)),
                          "V engines disagree" + at);

                auto a = dist_brute(StatId::adj(x, y), n, opts);
                r.require(a.same_coeffs(dist_A_recurrence(x, y, n)),
                          "A engines disagree" + at);
                if (same_on(x, y, n))
                    r.require(a.same_coeffs(dist_AXX_formula(x, n)),
                              "A closed form disagrees" + at);

                auto e = dist_E(x, y, n, Method::Brute, opts);
                r.require(e.same_coeffs(dist_E(x, y, n, Method::Recurrence)) &&
                              e.same_coeffs(dist_E(x, y, n, Method::ClosedForm)),
                          "E engines disagree" + at);

                if (disjoint_on(x, y, n) && covers_on(x, y, n)) {
                    auto g = dist_brute(StatId::gamma(x, y), n, opts);
                    r.require(g.same_coeffs(dist_gamma_formula(x, y, n)),
                              "Gamma closed form disagrees" + at);
                }
            }
    return r;
}

// 5. V = A on disjoint grid pairs (n <= 8) and the verified bijection
// transporting adj to val (n <= 7).
Outcome criterion5() {
    Outcome r;
    const auto specs = seven_specs();
    for (const auto& x : specs)
        for (const auto& y : specs)
            for (int n = 0; n <= 8; ++n) {
                if (!disjoint_on(x, y, n))
                    continue;
                r.require(dist_V_recurrence(x, y, n)
                              .same_coeffs(dist_A_recurrence(x, y, n)),
                          "V != A for disjoint (" + x.to_string() + ", " +
                              y.to_string() + "), n=" + std::to_string(n));
            }

    const std::pair<const char*, const char*> theta_pairs[] = {
        {"even", "odd"}, {"res:1,3", "res:2,3"}, {"odd", "set:2,4,8"}};
    for (const auto& [xs, ys] : theta_pairs) {
        auto x = SetSpec::parse(xs), y = SetSpec::parse(ys);
        for (int n = 1; n <= 7; ++n) {
            auto table = build_theta(n, x, y);
            std::set<Permutation> image;
            bool transported = true;
            for (const auto& [src, img] : table.forward) {
                image.insert(img);
                if (eval_adj(src, x, y) != eval_val(img, x, y))
                    transported = false;
            }
            const std::string at = " for (" + std::string(xs) + ", " + ys +
                                   "), n=" + std::to_string(n);
            r.require(table.forward.size() == image.size() &&
                          image.size() == static_cast<size_t>(
                                              factorial(n).convert_to<long long>()),
                      "theta is not a bijection" + at);
            r.require(transported, "theta fails to transport adj to val" + at);
        }
    }
    return r;
}

// 6. Derived descent pairings reproduce A and V for every supported
// residue pattern with moduli 2..5, n <= 8.
Outcome criterion6() {
    Outcome r;
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k; ++i) {
            auto x = SetSpec::residue(i, k);
            auto adj = derive_AB_for_adjacency(x, x);
            for (int n = 0; n <= 8; ++n)
                r.require(dist_D_recurrence(adj.a, adj.b, n)
                              .same_coeffs(dist_A_recurrence(x, x, n)),
                          "D != A for X=" + x.to_string() +
                              ", n=" + std::to_string(n));
            if (i != 1) {
                auto val = derive_AB_for_value(x, x);
                for (int n = 0; n <= 8; ++n)
                    r.require(dist_D_recurrence(val.a, val.b, n)
                                  .same_coeffs(dist_V_recurrence(x, x, n)),
                              "D != V for X=" + x.to_string() +
                                  ", n=" + std::to_string(n));
            }
            for (int j = i + 1; j <= k; ++j) {
                auto y = SetSpec::residue(j, k);
                auto ab = derive_AB_for_adjacency(x, y);
                auto vb = derive_AB_for_value(x, y);
                for (int n = 0; n <= 8; ++n) {
                    const std::string at = " for (" + x.to_string() + ", " +
                                           y.to_string() + "), n=" + std::to_string(n);
                    r.require(dist_D_recurrence(ab.a, ab.b, n)
                                  .same_coeffs(dist_A_recurrence(x, y, n)),
                              "D != A" + at);
                    r.require(dist_D_recurrence(vb.a, vb.b, n)
                                  .same_coeffs(dist_V_recurrence(x, y, n)),
                              "D != V" + at);
                }
            }
        }
    }
    return r;
}

// 7. Identity sweep: every legal grid point, three-way evaluation; the
// theorem form must match the oracle everywhere, and the tallies of
// printed-form discrepancies must be exactly the frozen ones.
Outcome criterion7() {
    Outcome r;
    SweepOptions opts;
    opts.brute_max = 8;
    SweepResult res = sweep(opts);
    r.require(res.total_gate_failures == 0,
              std::to_string(res.total_gate_failures) +
                  " theorem-vs-oracle failure(s)");
    r.require(res.total_derived_failures == 0,
              std::to_string(res.total_derived_failures) +
                  " derived-pairing failure(s)");
    r.require(res.tallies.size() == 7, "expected 7 family tallies");
    for (size_t f = 0; f < res.tallies.size() && f < 7; ++f) {
        const auto& got = res.tallies[f];
        const auto& want = frozen::kIdentityTallies[f];
        std::ostringstream line;
        line << got.family << ": " << got.points << " points, " << got.printed_eq
             << " printed-form matches, " << got.theorem_eq
             << " theorem-vs-printed matches";
        r.notes.push_back(line.str());
        r.require(got.family == want.family && got.points == want.points &&
                      got.printed_eq == want.printed_eq &&
                      got.theorem_eq == want.theorem_eq,
                  std::string(want.family) + ": tallies drifted from the frozen table");
    }
    return r;
}

// 8. Conjectures: exhaustive check for n <= 8; a counterexample demotes the
// exit code to 2 and dumps the witness report.
Outcome criterion8() {
    Outcome r;
    std::vector<ConjectureResult> c1, c2;
    for (int n = 1; n <= 8; ++n) {
        c1.push_back(test_conjecture1(n));
        c2.push_back(test_conjecture2(n));
    }
    for (const auto* batch : {&c1, &c2})
        for (const ConjectureResult& c : *batch)
            if (!c.holds) {
                r.counterexample = true;
                r.notes.push_back("COUNTEREXAMPLE " + conjecture_report_json(c));
            }
    if (!r.counterexample)
        r.notes.push_back("conjectures 1 and 2 verified exhaustively up to n=8");
    return r;
}

// 9. Property suite on n <= 7: row sums, the reverse/inverse symmetries,
// the transport law, insertion bijectivity, and slot-class counts.
Outcome criterion9() {
    Outcome r;
    const auto specs = seven_specs();

    // Row sums and the distribution-level argument symmetry.
    for (const auto& x : specs)
        for (const auto& y : specs)
            for (int n = 0; n <= 7; ++n) {
                const std::string at = " for (" + x.to_string() + ", " +
                                       y.to_string() + "), n=" + std::to_string(n);
                Bigint fact = factorial(n);
                for (const Distribution& d :
                     {dist_D_recurrence(x, y, n), dist_A_recurrence(x, y, n),
                      dist_V_recurrence(x, y, n)}) {
                    Bigint sum = 0;
                    for (const Bigint& c : d.coeffs)
                        sum += c;
                    r.require(sum == fact, "row sum != n!" + at);
                }
                r.require(dist_A_recurrence(x, y, n)
                              .same_coeffs(dist_A_recurrence(y, x, n)),
                          "A symmetry broken" + at);
                r.require(dist_V_recurrence(x, y, n)
                              .same_coeffs(dist_V_recurrence(y, x, n)),
                          "V symmetry broken" + at);
            }

    // Pointwise symmetries and the transport law over all of S_7.
    long long pointwise_bad = 0, transport_bad = 0;
    enumerate_sn(7, 11, [&](const Permutation& p) {
        const Permutation rev = p.reversed(), inv = p.inverse(), img = foata(p);
        for (const auto& x : specs)
            for (const auto& y : specs) {
                if (eval_adj(p, x, y) != eval_adj(rev, y, x))
                    ++pointwise_bad;
                if (eval_val(p, x, y) != eval_val(inv, y, x))
                    ++pointwise_bad;
                if (eval_des(img, x, y) != eval_exc(p, y, x))
                    ++transport_bad;
            }
    });
    r.require(pointwise_bad == 0,
              std::to_string(pointwise_bad) + " pointwise symmetry violations");
    r.require(transport_bad == 0,
              std::to_string(transport_bad) + " transport-law violations");

    // insert_I reaches every permutation of the next level exactly once.
    for (int n = 0; n <= 7; ++n) {
        std::set<Permutation> image;
        long long inserted = 0;
        enumerate_sn(n, 11, [&](const Permutation& s) {
            for (int locus = 1; locus <= n + 1; ++locus) {
                image.insert(insert_I(s, locus));
                ++inserted;
            }
        });
        r.require(static_cast<long long>(image.size()) == inserted &&
                      Bigint(inserted) == factorial(n + 1),
                  "insert_I is not a bijection at n=" + std::to_string(n));
    }

    // Slot-class counts equal the recurrence coefficients, per membership
    // case of the inserted value, for the disjoint grid pairs.
    long long slot_bad = 0;
    for (const auto& x : specs)
        for (const auto& y : specs) {
            for (int m = 0; m <= 6; ++m) {
                if (!disjoint_on(x, y, m + 1))
                    continue;
                const long long xm = x.prefix_count(m), ym = y.prefix_count(m);
                const bool vin_x = x.contains(m + 1), vin_y = y.contains(m + 1);
                enumerate_sn(m, 11, [&](const Permutation& s) {
                    const auto la = label_adjacency_slots(s, x, y);
                    const auto lv = label_value_slots(s, x, y);
                    const int a = eval_adj(s, x, y), v = eval_val(s, x, y);
                    const auto check = [&](const SlotLabeling& sl, int base) {
                        long long up = vin_x ? ym - base : vin_y ? xm - base : 0;
                        long long down = (vin_x || vin_y) ? 0 : base;
                        if (sl.count(Effect::Up) != up ||
                            sl.count(Effect::Down) != down ||
                            sl.count(Effect::Unchanged) != m + 1 - up - down)
                            ++slot_bad;
                    };
                    check(la, a);
                    check(lv, v);
                });
            }
        }
    r.require(slot_bad == 0,
              std::to_string(slot_bad) + " slot-class count violations");
    return r;
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;  // 0 = no budget
    Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "worked descent example, four-way agreement", 1.0, criterion1},
    {2, "cycle-reading bijection example and S_7 round-trip", 5.0, criterion2},
    {3, "sixteen-statistic table and group closed forms (single-threaded)", 120.0,
     criterion3},
    {4, "engine triple agreement on the 7-spec grid", 0.0, criterion4},
    {5, "V = A on disjoint pairs and the verified transport bijection", 0.0,
     criterion5},
    {6, "derived descent pairings reproduce A and V", 0.0, criterion6},
    {7, "identity sweep with frozen discrepancy tallies", 60.0, criterion7},
    {8, "joint-equidistribution conjectures exhaustive to n=8", 0.0, criterion8},
    {9, "property suite (sums, symmetries, transport, insertions, slots)", 0.0,
     criterion9},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        try {
            selected = std::stoi(argv[1]);
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance [1..9]\n";
            return 64;
        }
        if (selected < 1 || selected > 9) {
            std::cerr << "usage: acceptance [1..9]\n";
            return 64;
        }
    }

    bool any_fail = false, any_counterexample = false;
    for (const Criterion& c : kCriteria) {
        if (selected != 0 && c.number != selected)
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (c.budget_seconds > 0 && dt > c.budget_seconds)
            out.fail("runtime " + std::to_string(dt) + " s exceeds the " +
                     std::to_string(c.budget_seconds) + " s budget");

        any_fail = any_fail || !out.pass;
        any_counterexample = any_counterexample || out.counterexample;

        std::cout << (out.pass && !out.counterexample ? "[PASS]" : "[FAIL]")
                  << " criterion " << c.number << ": " << c.title << " ("
                  << std::fixed << std::setprecision(2) << dt << " s)\n";
        for (const std::string& note : out.notes)
            std::cout << "    " << note << "\n";
    }

    if (any_fail)
        return 1;
    return any_counterexample ? 2 : 0;
}
