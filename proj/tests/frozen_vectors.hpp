// Frozen expected values for the permstat test suite.
// Generated by scripts/gen_vectors.py (independent Python oracle).
// Regenerate: python3 scripts/gen_vectors.py > tests/frozen_vectors.hpp
#pragma once
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace frozen {

// S1..S16 evaluated on 215436
inline constexpr int kTable1On215436[16] = {2, 1, 2, 2, 2, 1, 1, 2, 2, 1, 1, 1, 1, 0, 2, 0};
inline constexpr int kS17On215436 = 1;
inline constexpr int kTStatsOn215436[3] = {1, 1, 0};

// des row for X = {2,3,4,6,7,9}, Y = {1,4,8}, n = 6
inline const std::vector<long long> kWorkedDes6 = {192, 456, 72, 0, 0, 0, 0};

// des, X=Even, Y=All; rows n = 1..7
inline const std::vector<std::vector<long long>> kDesEvenAll = {
    {1, 0},
    {1, 1, 0},
    {4, 2, 0, 0},
    {4, 16, 4, 0, 0},
    {36, 72, 12, 0, 0, 0},
    {36, 324, 324, 36, 0, 0, 0},
    {576, 2592, 1728, 144, 0, 0, 0, 0},
};

// des, X=Odd, Y=All; rows n = 1..7
inline const std::vector<std::vector<long long>> kDesOddAll = {
    {1, 0},
    {2, 0, 0},
    {2, 4, 0, 0},
    {12, 12, 0, 0, 0},
    {12, 72, 36, 0, 0, 0},
    {144, 432, 144, 0, 0, 0, 0},
    {144, 1728, 2592, 576, 0, 0, 0, 0},
};

// val, X=Even, Y=Even; rows n = 1..7
inline const std::vector<std::vector<long long>> kValEvenEven = {
    {1, 0},
    {1, 1, 0},
    {4, 2, 0, 0},
    {4, 16, 4, 0, 0},
    {36, 72, 12, 0, 0, 0},
    {36, 324, 324, 36, 0, 0, 0},
    {576, 2592, 1728, 144, 0, 0, 0, 0},
};

// val, X=Odd, Y=Odd; rows n = 1..7
inline const std::vector<std::vector<long long>> kValOddOdd = {
    {0, 1},
    {1, 1, 0},
    {0, 4, 2, 0},
    {4, 16, 4, 0, 0},
    {0, 36, 72, 12, 0, 0},
    {36, 324, 324, 36, 0, 0, 0},
    {0, 576, 2592, 1728, 144, 0, 0, 0},
};

// adj, X=Odd, Y=Odd; rows n = 1..7
inline const std::vector<std::vector<long long>> kAdjOddOdd = {
    {1, 0},
    {2, 0, 0},
    {2, 4, 0, 0},
    {12, 12, 0, 0, 0},
    {12, 72, 36, 0, 0, 0},
    {144, 432, 144, 0, 0, 0, 0},
    {144, 1728, 2592, 576, 0, 0, 0, 0},
};

// adj, X=Even, Y=Even; rows n = 1..7
inline const std::vector<std::vector<long long>> kAdjEvenEven = {
    {1, 0},
    {2, 0, 0},
    {6, 0, 0, 0},
    {12, 12, 0, 0, 0},
    {72, 48, 0, 0, 0, 0},
    {144, 432, 144, 0, 0, 0, 0},
    {1440, 2880, 720, 0, 0, 0, 0, 0},
};

// exc, X=All, Y=Even; rows n = 1..7
inline const std::vector<std::vector<long long>> kExcAllEven = {
    {1, 0},
    {1, 1, 0},
    {4, 2, 0, 0},
    {4, 16, 4, 0, 0},
    {36, 72, 12, 0, 0, 0},
    {36, 324, 324, 36, 0, 0, 0},
    {576, 2592, 1728, 144, 0, 0, 0, 0},
};

// gamma, X=Even, Y=Odd; rows n = 1..7
inline const std::vector<std::vector<long long>> kGammaEvenOdd = {
    {0, 1},
    {1, 0, 1},
    {0, 4, 0, 2},
    {4, 0, 16, 0, 4},
    {0, 36, 0, 72, 0, 12},
    {36, 0, 324, 0, 324, 0, 36},
    {0, 576, 0, 2592, 0, 1728, 0, 144},
};

// val, X=res:1,3, Y=res:2,3; rows n = 1..7
inline const std::vector<std::vector<long long>> kValR13R23 = {
    {1, 0},
    {1, 1, 0},
    {4, 2, 0, 0},
    {12, 12, 0, 0, 0},
    {36, 72, 12, 0, 0, 0},
    {288, 384, 48, 0, 0, 0, 0},
    {1440, 2880, 720, 0, 0, 0, 0, 0},
};

// adj, X=Y=res:2,5; rows n = 1..7
inline const std::vector<std::vector<long long>> kAdjR25R25 = {
    {1, 0},
    {2, 0, 0},
    {6, 0, 0, 0},
    {24, 0, 0, 0, 0},
    {120, 0, 0, 0, 0, 0},
    {720, 0, 0, 0, 0, 0, 0},
    {3600, 1440, 0, 0, 0, 0, 0, 0},
};

// s17 distribution; rows n = 1..7
inline const std::vector<std::vector<long long>> kS17Dist = {
    {0, 1},
    {0, 1, 1},
    {0, 3, 2, 1},
    {0, 12, 8, 3, 1},
    {0, 60, 40, 15, 4, 1},
    {0, 360, 240, 90, 24, 5, 1},
    {0, 2520, 1680, 630, 168, 35, 6, 1},
};

// joint distribution of (S10, S12, S17) over S_4, sorted tuples
inline const std::vector<std::pair<std::array<int,3>, long long>> kJointS10S12S17n4 = {
    {{0, 0, 1}, 3},
    {{0, 0, 2}, 1},
    {{0, 0, 3}, 3},
    {{0, 0, 4}, 1},
    {{0, 1, 1}, 3},
    {{0, 1, 2}, 1},
    {{1, 0, 1}, 3},
    {{1, 0, 2}, 1},
    {{1, 1, 1}, 3},
    {{1, 1, 2}, 5},
};

// identity sweep tallies over k=2..5, n=0..4, all legal (i,j,t), s=0..n+1
// fields: family, points, printed_lhs==printed_rhs, theorem_lhs==printed_rhs
struct IdentityTally { const char* family; long long points, printed_eq, theorem_eq; };
inline constexpr IdentityTally kIdentityTallies[7] = {
    {"case1", 300, 300, 300},
    {"case2", 700, 322, 396},
    {"case3", 700, 26, 7},
    {"caseI", 400, 120, 120},
    {"caseII", 680, 23, 91},
    {"caseA", 200, 60, 60},
    {"caseB", 400, 24, 1},
};

// +2 gamma jumps at n = 3 for X = res:1,2|res:4,4, Y = even
inline constexpr long long kGammaJumpCountN3 = 8;

}  // namespace frozen
