#include <doctest.h>

#include <string>

#include "frozen_vectors.hpp"
#include "permstat/identities.hpp"

using namespace permstat;

TEST_SUITE("identities") {

TEST_CASE("case names round-trip") {
    for (IdentityCase c : {IdentityCase::Case1, IdentityCase::Case2,
                           IdentityCase::Case3, IdentityCase::CaseI,
                           IdentityCase::CaseII, IdentityCase::CaseA,
                           IdentityCase::CaseB})
        CHECK(parse_case(case_name(c)) == c);
    CHECK_THROWS_AS(parse_case("case9"), ParseError);
}

TEST_CASE("validate_point enforces the legal ranges") {
    CHECK_NOTHROW(validate_point({IdentityCase::Case1, 3, 1, 2, 0, 1, 1}));
    // t out of its case range (case1 needs t < i).
    CHECK_THROWS_AS(validate_point({IdentityCase::Case1, 3, 1, 2, 1, 1, 1}),
                    ParseError);
    // offsets must be ordered for the two-class cases.
    CHECK_THROWS_AS(validate_point({IdentityCase::Case1, 3, 2, 1, 0, 1, 1}),
                    ParseError);
    CHECK_THROWS_AS(validate_point({IdentityCase::Case2, 3, 1, 1, 1, 1, 1}),
                    ParseError);
    // modulus floor.
    CHECK_THROWS_AS(validate_point({IdentityCase::Case1, 1, 0, 0, 0, 0, 0}),
                    ParseError);
    // caseA has no legal t when i <= 1.
    CHECK_THROWS_AS(validate_point({IdentityCase::CaseA, 2, 0, 0, 0, 0, 0}),
                    ParseError);
    CHECK_NOTHROW(validate_point({IdentityCase::CaseB, 2, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(validate_point({IdentityCase::CaseB, 2, 0, 0, 1, 0, 0}),
                    ParseError);
    // negative n / s.
    CHECK_THROWS_AS(validate_point({IdentityCase::CaseII, 2, 1, 1, 1, -1, 0}),
                    ParseError);
    // single-class cases insist on j = i.
    CHECK_THROWS_AS(validate_point({IdentityCase::CaseII, 2, 1, 0, 1, 0, 0}),
                    ParseError);
    // error message names the case ranges.
    CHECK_THROWS_WITH_AS(validate_point({IdentityCase::Case3, 3, 0, 1, 0, 1, 1}),
                         doctest::Contains("j <= t <= k-1"), ParseError);
}

TEST_CASE("identity_sets names the residue classes of the point") {
    auto [x1, y1] = identity_sets({IdentityCase::Case1, 3, 1, 2, 0, 1, 1});
    CHECK(x1.to_string() == "res:1,3");
    CHECK(y1.to_string() == "res:2,3");
    auto [x2, y2] = identity_sets({IdentityCase::CaseB, 2, 0, 0, 0, 0, 0});
    CHECK(x2.to_string() == "res:0,2");
    CHECK(y2.to_string() == "res:0,2");
}

TEST_CASE("legal point grids match the frozen sweep counts") {
    for (const auto& tally : frozen::kIdentityTallies) {
        IdentityCase family = parse_case(tally.family);
        long long total = 0;
        for (int k = 2; k <= 5; ++k)
            total += static_cast<long long>(legal_points(family, k, 4).size());
        CAPTURE(tally.family);
        CHECK(total == tally.points);
    }
    // Hand count for case1: k <= 2 has no 0 <= t < i < j <= k-1 triple; each
    // point ranges over n = 0..4 and s = 0..n+1, i.e. 20 (n,s) pairs.
    CHECK(legal_points(IdentityCase::Case1, 2, 4).size() == 0);
    CHECK(legal_points(IdentityCase::Case1, 3, 4).size() == 20);
    CHECK(legal_points(IdentityCase::Case1, 4, 4).size() == 80);
    CHECK(legal_points(IdentityCase::Case1, 5, 4).size() == 200);
}

TEST_CASE("pinned grid points") {
    // A fully agreeing point.
    IdentityReport good =
        verify_identity({IdentityCase::Case1, 3, 1, 2, 0, 1, 1});
    CHECK(good.m == 3);
    CHECK(good.gate_ok);
    CHECK(good.brute_checked);
    CHECK(good.printed_eq);
    CHECK(good.theorem_vs_printed);
    REQUIRE(good.printed_lhs.has_value());
    CHECK(*good.printed_lhs == *good.printed_rhs);

    // The displayed right side of case3 disagrees with the proven value
    // at this point (5 against 1); the engine gate still holds.
    IdentityReport witness =
        verify_identity({IdentityCase::Case3, 3, 1, 2, 2, 0, 1});
    CHECK(witness.m == 2);
    REQUIRE(witness.printed_rhs.has_value());
    CHECK(*witness.printed_rhs == 5);
    CHECK(witness.theorem_lhs == 1);
    CHECK(witness.oracle_rhs == 1);
    CHECK(witness.gate_ok);
    CHECK_FALSE(witness.theorem_vs_printed);
    CHECK_FALSE(witness.printed_eq);

    // A boundary point where the displayed left side is undefined
    // (factorial of a negative integer).
    IdentityPoint undef{IdentityCase::CaseB, 2, 0, 0, 0, 0, 0};
    CHECK_FALSE(printed_lhs(undef).has_value());
    IdentityReport ub = verify_identity(undef);
    CHECK(ub.gate_ok);
    CHECK_FALSE(ub.printed_eq);
    CHECK_FALSE(ub.theorem_vs_printed);
}

TEST_CASE("report CSV line shape") {
    IdentityReport r = verify_identity({IdentityCase::Case1, 3, 1, 2, 0, 1, 1});
    std::string line = report_csv_line(r);
    CHECK(line.rfind("case1,3,1,2,0,1,1,", 0) == 0);
    CHECK(line.find(",true") != std::string::npos);
}

TEST_CASE("full sweep tallies match the frozen table") {
    SweepOptions opts;
    opts.brute_max = 6;  // keep the unit run quick; acceptance uses 8
    SweepResult res = sweep(opts);
    REQUIRE(res.tallies.size() == 7);
    CHECK(res.total_gate_failures == 0);
    CHECK(res.total_derived_failures == 0);
    long long points = 0;
    for (size_t f = 0; f < 7; ++f) {
        const auto& got = res.tallies[f];
        const auto& want = frozen::kIdentityTallies[f];
        CAPTURE(got.family);
        CHECK(got.family == want.family);
        CHECK(got.points == want.points);
        CHECK(got.printed_eq == want.printed_eq);
        CHECK(got.theorem_eq == want.theorem_eq);
        CHECK(got.gate_failures == 0);
        CHECK(got.derived_failures == 0);
        CHECK(got.brute_points > 0);
        points += got.points;
    }
    CHECK(res.total_points == points);
    CHECK(res.reports.empty());  // keep_reports defaults off

    SweepOptions keep;
    keep.k_max = 3;
    keep.n_max = 1;
    keep.keep_reports = true;
    SweepResult kept = sweep(keep);
    CHECK(kept.reports.size() == static_cast<size_t>(kept.total_points));
}

}  // TEST_SUITE
