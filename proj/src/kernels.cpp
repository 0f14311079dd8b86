#include "permstat/kernels.hpp"

#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PERMSTAT_X86 1
#endif

namespace permstat::kernels {

BatchTables make_batch_tables(const SetSpec& x, const SetSpec& y, int n) {
    if (n > kMaxN)
        throw std::invalid_argument("batch tables support n <= 15");
    BatchTables t;
    for (int v = 1; v <= n; ++v) {
        t.value_in_x[static_cast<size_t>(v)] = x.contains(v) ? 0xFF : 0x00;
        t.value_in_y[static_cast<size_t>(v)] = y.contains(v) ? 0xFF : 0x00;
        t.pos_in_x[static_cast<size_t>(v)] = t.value_in_x[static_cast<size_t>(v)];
        t.pos_in_y[static_cast<size_t>(v)] = t.value_in_y[static_cast<size_t>(v)];
    }
    return t;
}

namespace {

// ---- scalar reference kernel -------------------------------------------

void scalar_histogram(FamilyKind kind, const BatchTables& t, const uint8_t* cols,
                      int n, int lanes, long long* hist) {
    std::array<uint8_t, kLanes> count{};
    auto row = [&](int i) { return cols + static_cast<size_t>(i) * kLanes; };
    switch (kind) {
        case FamilyKind::Des:
            for (int i = 0; i + 1 < n; ++i) {
                const uint8_t *a = row(i), *b = row(i + 1);
                for (int l = 0; l < lanes; ++l)
                    count[static_cast<size_t>(l)] += static_cast<uint8_t>(
                        (a[l] > b[l]) & (t.value_in_x[a[l]] & t.value_in_y[b[l]] & 1));
            }
            break;
        case FamilyKind::Adj:
            for (int i = 0; i + 1 < n; ++i) {
                const uint8_t *a = row(i), *b = row(i + 1);
                for (int l = 0; l < lanes; ++l)
                    count[static_cast<size_t>(l)] += static_cast<uint8_t>(
                        t.value_in_x[a[l]] & t.value_in_y[b[l]] & 1);
            }
            break;
        case FamilyKind::Val:
            for (int i = 0; i < n; ++i) {
                if (!t.pos_in_x[static_cast<size_t>(i + 1)])
                    continue;
                const uint8_t* a = row(i);
                for (int l = 0; l < lanes; ++l)
                    count[static_cast<size_t>(l)] +=
                        static_cast<uint8_t>(t.value_in_y[a[l]] & 1);
            }
            break;
        case FamilyKind::Exc:
            for (int i = 0; i < n; ++i) {
                if (!t.pos_in_x[static_cast<size_t>(i + 1)])
                    continue;
                const uint8_t* a = row(i);
                for (int l = 0; l < lanes; ++l)
                    count[static_cast<size_t>(l)] += static_cast<uint8_t>(
                        (a[l] > i + 1) & (t.value_in_y[a[l]] & 1));
            }
            break;
        case FamilyKind::Gamma:
            for (int i = 0; i < n; ++i) {
                const uint8_t* a = row(i);
                uint8_t px = t.pos_in_x[static_cast<size_t>(i + 1)];
                uint8_t py = t.pos_in_y[static_cast<size_t>(i + 1)];
                for (int l = 0; l < lanes; ++l)
                    count[static_cast<size_t>(l)] += static_cast<uint8_t>(
                        ((px & t.value_in_x[a[l]]) | (py & t.value_in_y[a[l]])) & 1);
            }
            break;
    }
    for (int l = 0; l < lanes; ++l)
        ++hist[count[static_cast<size_t>(l)]];
}

#ifdef PERMSTAT_X86

// ---- AVX2 kernel --------------------------------------------------------
// Values are 1..n <= 15, so a 16-entry table lookup is a single in-lane
// byte shuffle; the table is replicated into both 128-bit halves.

__attribute__((target("avx2"))) inline __m256i load_lut(const std::array<uint8_t, 16>& lut) {
    __m128i half = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lut.data()));
    return _mm256_broadcastsi128_si256(half);
}

__attribute__((target("avx2"))) inline __m256i load_row(const uint8_t* cols, int i) {
    return _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(cols + static_cast<size_t>(i) * kLanes));
}

__attribute__((target("avx2")))
void avx2_histogram(FamilyKind kind, const BatchTables& t, const uint8_t* cols,
                    int n, int lanes, long long* hist) {
    const __m256i in_x = load_lut(t.value_in_x), in_y = load_lut(t.value_in_y);
    __m256i count = _mm256_setzero_si256();
    switch (kind) {
        case FamilyKind::Des:
            for (int i = 0; i + 1 < n; ++i) {
                __m256i a = load_row(cols, i), b = load_row(cols, i + 1);
                __m256i hit = _mm256_and_si256(
                    _mm256_cmpgt_epi8(a, b),
                    _mm256_and_si256(_mm256_shuffle_epi8(in_x, a),
                                     _mm256_shuffle_epi8(in_y, b)));
                count = _mm256_sub_epi8(count, hit);
            }
            break;
        case FamilyKind::Adj:
            for (int i = 0; i + 1 < n; ++i) {
                __m256i a = load_row(cols, i), b = load_row(cols, i + 1);
                __m256i hit = _mm256_and_si256(_mm256_shuffle_epi8(in_x, a),
                                               _mm256_shuffle_epi8(in_y, b));
                count = _mm256_sub_epi8(count, hit);
            }
            break;
        case FamilyKind::Val:
            for (int i = 0; i < n; ++i) {
                if (!t.pos_in_x[static_cast<size_t>(i + 1)])
                    continue;
                count = _mm256_sub_epi8(count, _mm256_shuffle_epi8(in_y, load_row(cols, i)));
            }
            break;
        case FamilyKind::Exc:
            for (int i = 0; i < n; ++i) {
                if (!t.pos_in_x[static_cast<size_t>(i + 1)])
                    continue;
                __m256i a = load_row(cols, i);
                __m256i hit = _mm256_and_si256(
                    _mm256_cmpgt_epi8(a, _mm256_set1_epi8(static_cast<char>(i + 1))),
                    _mm256_shuffle_epi8(in_y, a));
                count = _mm256_sub_epi8(count, hit);
            }
            break;
        case FamilyKind::Gamma:
            for (int i = 0; i < n; ++i) {
                __m256i a = load_row(cols, i);
                __m256i px = _mm256_set1_epi8(
                    static_cast<char>(t.pos_in_x[static_cast<size_t>(i + 1)]));
                __m256i py = _mm256_set1_epi8(
                    static_cast<char>(t.pos_in_y[static_cast<size_t>(i + 1)]));
                __m256i hit = _mm256_or_si256(
                    _mm256_and_si256(px, _mm256_shuffle_epi8(in_x, a)),
                    _mm256_and_si256(py, _mm256_shuffle_epi8(in_y, a)));
                count = _mm256_sub_epi8(count, hit);
            }
            break;
    }
    alignas(32) uint8_t out[kLanes];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), count);
    for (int l = 0; l < lanes; ++l)
        ++hist[out[l]];
}

#endif  // PERMSTAT_X86

bool g_use_avx2 = [] {
#ifdef PERMSTAT_X86
    return static_cast<bool>(__builtin_cpu_supports("avx2"));
#else
    return false;
#endif
}();

}  // namespace

bool avx2_supported() {
#ifdef PERMSTAT_X86
    return static_cast<bool>(__builtin_cpu_supports("avx2"));
#else
    return false;
#endif
}

const char* backend_name() { return g_use_avx2 ? "avx2" : "scalar"; }

void set_backend(const std::string& name) {
    if (name == "scalar") {
        g_use_avx2 = false;
    } else if (name == "avx2") {
        if (!avx2_supported())
            throw std::runtime_error("avx2 backend requested but not supported");
        g_use_avx2 = true;
    } else if (name == "auto") {
        g_use_avx2 = avx2_supported();
    } else {
        throw std::runtime_error("unknown kernel backend '" + name + "'");
    }
}

void batch_histogram(FamilyKind kind, const BatchTables& tables,
                     const uint8_t* cols, int n, int lanes, long long* hist) {
    if (n > kMaxN || lanes > kLanes)
        throw std::invalid_argument("batch_histogram: block too large");
    if (n == 0) {
        hist[0] += lanes;  // empty permutations all have statistic 0
        return;
    }
#ifdef PERMSTAT_X86
    // The AVX2 path always loads full 32-byte rows, so partial blocks must
    // carry valid (ignorable) bytes; we require full blocks instead.
    if (g_use_avx2 && lanes == kLanes) {
        avx2_histogram(kind, tables, cols, n, lanes, hist);
        return;
    }
#endif
    scalar_histogram(kind, tables, cols, n, lanes, hist);
}

}  // namespace permstat::kernels
