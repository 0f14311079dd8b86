#pragma once
// Batched statistic evaluation used by the brute-force distribution engine.
// Permutations are packed 32 to a block, column-major bytes; a histogram of
// the statistic over the block is produced in one pass. Two interchangeable
// implementations exist: a scalar reference kernel and an AVX2 kernel
// (membership lookups as 16-byte shuffles), chosen at runtime by CPU
// detection. They are equivalence-tested against each other and against the
// direct per-permutation evaluators.

#include <array>
#include <cstdint>

#include "permstat/set_spec.hpp"
#include "permstat/stats.hpp"

namespace permstat::kernels {

inline constexpr int kLanes = 32;    // permutations per block
inline constexpr int kMaxN = 15;     // value/position tables are 16 entries

// Byte masks (0xFF / 0x00) indexed by value resp. position, 1-based; index 0
// unused. Only meaningful for n <= kMaxN.
struct BatchTables {
    std::array<uint8_t, 16> value_in_x{}, value_in_y{};
    std::array<uint8_t, 16> pos_in_x{}, pos_in_y{};
};

BatchTables make_batch_tables(const SetSpec& x, const SetSpec& y, int n);

// cols[i*kLanes + lane] = entry at position i+1 of the lane's permutation,
// for 0 <= i < n, 0 <= lane < lanes (lanes <= kLanes). Adds one count per
// lane to hist[statize], hist needs n+1 slots.
void batch_histogram(FamilyKind kind, const BatchTables& tables,
                     const uint8_t* cols, int n, int lanes, long long* hist);

bool avx2_supported();
const char* backend_name();          // "avx2" or "scalar"
// Test hook: "scalar", "avx2" (throws if the CPU lacks it) or "auto".
void set_backend(const std::string& name);

}  // namespace permstat::kernels
