#include "permstat/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "permstat/kernels.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

namespace {

Distribution make_dist(int n, std::string stat, std::vector<Bigint> coeffs) {
    coeffs.resize(static_cast<size_t>(n) + 1);
    return Distribution{n, std::move(stat), std::move(coeffs)};
}

std::vector<Bigint> to_bigints(const std::vector<long long>& v) {
    return std::vector<Bigint>(v.begin(), v.end());
}

// Single enumeration task: all permutations of [n] with a fixed first entry
// (or the whole of S_n when first == 0), tallied into hist.
void brute_task(const StatId& stat, int n, int first, std::vector<long long>& hist) {
    std::vector<int> work;
    for (int v = 1; v <= n; ++v)
        if (v != first)
            work.push_back(v);
    if (first > 0)
        work.insert(work.begin(), first);
    const int fixed = first > 0 ? 1 : 0;

    const bool kernel_path =
        stat.kind == StatId::Kind::Family && n <= kernels::kMaxN;
    if (kernel_path) {
        const auto tables = kernels::make_batch_tables(stat.x, stat.y, n);
        std::array<uint8_t, static_cast<size_t>(kernels::kMaxN) * kernels::kLanes> cols{};
        int lane = 0;
        for_each_arrangement(work, fixed, [&](const std::vector<int>& p) {
            for (int i = 0; i < n; ++i)
                cols[static_cast<size_t>(i) * kernels::kLanes + static_cast<size_t>(lane)] =
                    static_cast<uint8_t>(p[static_cast<size_t>(i)]);
            if (++lane == kernels::kLanes) {
                kernels::batch_histogram(stat.family, tables, cols.data(), n, lane,
                                         hist.data());
                lane = 0;
            }
        });
        if (lane > 0)
            kernels::batch_histogram(stat.family, tables, cols.data(), n, lane,
                                     hist.data());
    } else {
        for_each_arrangement(work, fixed, [&](const std::vector<int>& p) {
            ++hist[static_cast<size_t>(eval_stat(Permutation(std::vector<int>(p)), stat))];
        });
    }
}

}  // namespace

Distribution dist_brute(const StatId& stat, int n, const BruteOptions& opts) {
    if (n > opts.cap)
        throw EnumerationCapError("refusing to enumerate S_" + std::to_string(n) +
                                  ": cap is " + std::to_string(opts.cap) +
                                  " (raise enumeration_cap to override)");
    const int workers = std::max(1, opts.parallelism);
    std::vector<long long> hist(static_cast<size_t>(n) + 1, 0);
    if (workers == 1 || n < 7) {
        brute_task(stat, n, 0, hist);
    } else {
        // Partition S_n by first entry; merge is additive, so the result is
        // identical regardless of scheduling.
        std::vector<std::vector<long long>> parts(
            static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n) + 1, 0));
        std::atomic<int> next{1};
        auto drain = [&] {
            for (int v = next.fetch_add(1); v <= n; v = next.fetch_add(1))
                brute_task(stat, n, v, parts[static_cast<size_t>(v) - 1]);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min(workers, n); ++w)
            pool.emplace_back(drain);
        for (auto& th : pool)
            th.join();
        for (const auto& part : parts)
            for (size_t s = 0; s < hist.size(); ++s)
                hist[s] += part[s];
    }
    return make_dist(n, stat.to_string(), to_bigints(hist));
}

Distribution dist_D_recurrence(const SetSpec& x, const SetSpec& y, int n) {
    std::vector<Bigint> row{1};
    auto old = [&row](long long j) {
        return (j >= 0 && j < static_cast<long long>(row.size()))
                   ? row[static_cast<size_t>(j)]
                   : Bigint(0);
    };
    for (long long m = 0; m < n; ++m) {
        std::vector<Bigint> next(static_cast<size_t>(m) + 2);
        const long long ym = y.prefix_count(m);
        const bool inx = x.contains(m + 1);
        for (long long k = 0; k <= m + 1; ++k) {
            if (inx)
                next[static_cast<size_t>(k)] =
                    (ym - (k - 1)) * old(k - 1) + (m + 1 - (ym - k)) * old(k);
            else
                next[static_cast<size_t>(k)] = (k + 1) * old(k + 1) + (m + 1 - k) * old(k);
        }
        row = std::move(next);
    }
    return make_dist(n, StatId::des(x, y).to_string(), std::move(row));
}

namespace {

// Shared 4-case insertion recurrence for A and V; the value version carries
// the extra "+1" in the X ∩ Y case.
Distribution rec_AV(const SetSpec& x, const SetSpec& y, int n, bool value_case) {
    std::vector<Bigint> row{1};
    auto old = [&row](long long j) {
        return (j >= 0 && j < static_cast<long long>(row.size()))
                   ? row[static_cast<size_t>(j)]
                   : Bigint(0);
    };
    for (long long m = 0; m < n; ++m) {
        std::vector<Bigint> next(static_cast<size_t>(m) + 2);
        const long long xm = x.prefix_count(m), ym = y.prefix_count(m);
        const bool inx = x.contains(m + 1), iny = y.contains(m + 1);
        for (long long k = 0; k <= m + 1; ++k) {
            Bigint v;
            if (!inx && !iny) {
                v = (k + 1) * old(k + 1) + (m + 1 - k) * old(k);
            } else if (inx && iny) {
                const long long c = (value_case ? 1 : 0) + xm + ym;
                v = (c - (k - 1)) * old(k - 1) + (m + 1 - (c - k)) * old(k);
            } else if (inx) {
                v = (ym - (k - 1)) * old(k - 1) + (m + 1 - (ym - k)) * old(k);
            } else {
                v = (xm - (k - 1)) * old(k - 1) + (m + 1 - (xm - k)) * old(k);
            }
            next[static_cast<size_t>(k)] = std::move(v);
        }
        row = std::move(next);
    }
    const StatId id = value_case ? StatId::val(x, y) : StatId::adj(x, y);
    return make_dist(n, id.to_string(), std::move(row));
}

}  // namespace

Distribution dist_A_recurrence(const SetSpec& x, const SetSpec& y, int n) {
    return rec_AV(x, y, n, /*value_case=*/false);
}

Distribution dist_V_recurrence(const SetSpec& x, const SetSpec& y, int n) {
    return rec_AV(x, y, n, /*value_case=*/true);
}

Distribution dist_V_formula(const SetSpec& x, const SetSpec& y, int n) {
    const long long xn = x.prefix_count(n), yn = y.prefix_count(n);
    const long long xc = n - xn, yc = n - yn;
    std::vector<Bigint> coeffs(static_cast<size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) {
        if (k > xn || k > yn || xn - k > yc)
            continue;  // impossible configuration, coefficient 0
        coeffs[static_cast<size_t>(k)] = factorial(k) * factorial(xn - k) *
                                         factorial(xc) * binomial(xn, k) *
                                         binomial(yn, k) * binomial(yc, xn - k);
    }
    return make_dist(n, StatId::val(x, y).to_string(), std::move(coeffs));
}

Distribution dist_AXX_formula(const SetSpec& x, int n) {
    const long long xn = x.prefix_count(n), xc = n - xn;
    std::vector<Bigint> coeffs(static_cast<size_t>(n) + 1);
    for (long long s = 0; s <= n; ++s)
        coeffs[static_cast<size_t>(s)] = factorial(xn) * factorial(xc) *
                                         binomial(xn - 1, s) * binomial(xc + 1, xn - s);
    return make_dist(n, StatId::adj(x, x).to_string(), std::move(coeffs));
}

Distribution dist_D_hr1(const SetSpec& x, const SetSpec& y, int n) {
    const auto xs = x.members(n);
    const long long cx = n - static_cast<long long>(xs.size());
    std::vector<Bigint> coeffs(static_cast<size_t>(n) + 1);
    for (long long s = 0; s <= n; ++s) {
        Bigint tot = 0;
        for (long long r = 0; r <= s; ++r) {
            Bigint prod = 1;
            for (long long xv : xs)
                prod *= 1 + r + alpha(x, n, xv) + beta(y, n, xv);
            Bigint term = binomial(cx + r, r) * binomial(n + 1, s - r) * prod;
            tot += ((s - r) % 2 == 0) ? term : -term;
        }
        coeffs[static_cast<size_t>(s)] = factorial(cx) * tot;
    }
    return make_dist(n, StatId::des(x, y).to_string(), std::move(coeffs));
}

Distribution dist_D_hr2(const SetSpec& x, const SetSpec& y, int n) {
    const auto xs = x.members(n);
    const long long nx = static_cast<long long>(xs.size()), cx = n - nx;
    std::vector<Bigint> coeffs(static_cast<size_t>(n) + 1);
    for (long long s = 0; s <= n; ++s) {
        Bigint tot = 0;
        for (long long r = 0; r <= nx - s; ++r) {
            Bigint prod = 1;
            for (long long xv : xs)
                prod *= r + beta(x, n, xv) - beta(y, n, xv);  // may be <= 0
            Bigint term = binomial(cx + r, r) * binomial(n + 1, nx - s - r) * prod;
            tot += ((nx - s - r) % 2 == 0) ? term : -term;
        }
        coeffs[static_cast<size_t>(s)] = factorial(cx) * tot;
    }
    return make_dist(n, StatId::des(x, y).to_string(), std::move(coeffs));
}

Distribution dist_E(const SetSpec& x, const SetSpec& y, int n, Method method,
                    const BruteOptions& opts) {
    Distribution d;
    switch (method) {
        case Method::Brute:
            return dist_brute(StatId::exc(x, y), n, opts);
        case Method::Recurrence:
            d = dist_D_recurrence(y, x, n);
            break;
        case Method::ClosedForm:
            d = dist_D_hr1(y, x, n);
            break;
    }
    d.stat = StatId::exc(x, y).to_string();
    return d;
}

Distribution dist_gamma_formula(const SetSpec& x, const SetSpec& y, int n) {
    if (!(disjoint_on(x, y, n) && covers_on(x, y, n)))
        throw HypothesisError(
            "gamma formula requires X ∪ Y ⊇ [n] and X ∩ Y ∩ [n] = ∅ "
            "(theorem hypothesis); got X = " + x.to_string() + ", Y = " + y.to_string());
    const long long xn = x.prefix_count(n), yn = y.prefix_count(n);
    std::vector<Bigint> coeffs(static_cast<size_t>(n) + 1);
    for (long long k = 0; k <= xn; ++k) {
        const long long s = 2 * k + yn - xn;
        if (s >= 0 && s <= n)
            coeffs[static_cast<size_t>(s)] +=
                factorial(xn) * factorial(yn) * binomial(xn, k) * binomial(yn, xn - k);
    }
    return make_dist(n, StatId::gamma(x, y).to_string(), std::move(coeffs));
}

Poly parse_poly(const std::string& name) {
    if (name == "D" || name == "d")
        return Poly::D;
    if (name == "A" || name == "a")
        return Poly::A;
    if (name == "V" || name == "v")
        return Poly::V;
    if (name == "E" || name == "e")
        return Poly::E;
    if (name == "Gamma" || name == "gamma" || name == "G" || name == "g")
        return Poly::Gamma;
    throw ParseError("bad polynomial '" + name + "' (want D, A, V, E or Gamma)");
}

const char* poly_name(Poly p) {
    switch (p) {
        case Poly::D:
            return "D";
        case Poly::A:
            return "A";
        case Poly::V:
            return "V";
        case Poly::E:
            return "E";
        case Poly::Gamma:
            return "Gamma";
    }
    return "?";
}

std::vector<std::pair<std::string, Distribution>> compute_poly(
    Poly poly, const SetSpec& x, const SetSpec& y, int n,
    const std::string& method, const BruteOptions& opts) {
    const bool all = method == "all";
    if (!all && method != "brute" && method != "rec" && method != "formula")
        throw ParseError("bad method '" + method +
                         "' (want brute, rec, formula or all)");
    const bool want_brute = all || method == "brute";
    const bool want_rec = all || method == "rec";
    const bool want_formula = all || method == "formula";
    std::vector<std::pair<std::string, Distribution>> out;

    switch (poly) {
        case Poly::D:
            if (want_brute)
                out.emplace_back("brute", dist_brute(StatId::des(x, y), n, opts));
            if (want_rec)
                out.emplace_back("rec", dist_D_recurrence(x, y, n));
            if (want_formula) {
                out.emplace_back("formula:hr1", dist_D_hr1(x, y, n));
                out.emplace_back("formula:hr2", dist_D_hr2(x, y, n));
            }
            break;
        case Poly::A:
            if (want_brute)
                out.emplace_back("brute", dist_brute(StatId::adj(x, y), n, opts));
            if (want_rec)
                out.emplace_back("rec", dist_A_recurrence(x, y, n));
            if (want_formula) {
                if (same_on(x, y, n))
                    out.emplace_back("formula", dist_AXX_formula(x, n));
                else if (!all)
                    throw NoClosedForm("no closed form for A with X != Y on [" +
                                       std::to_string(n) + "]");
            }
            break;
        case Poly::V:
            if (want_brute)
                out.emplace_back("brute", dist_brute(StatId::val(x, y), n, opts));
            if (want_rec)
                out.emplace_back("rec", dist_V_recurrence(x, y, n));
            if (want_formula)
                out.emplace_back("formula", dist_V_formula(x, y, n));
            break;
        case Poly::E:
            if (want_brute)
                out.emplace_back("brute", dist_E(x, y, n, Method::Brute, opts));
            if (want_rec)
                out.emplace_back("rec", dist_E(x, y, n, Method::Recurrence, opts));
            if (want_formula) {
                out.emplace_back("formula:hr1", dist_E(x, y, n, Method::ClosedForm, opts));
                Distribution hr2 = dist_D_hr2(y, x, n);
                hr2.stat = StatId::exc(x, y).to_string();
                out.emplace_back("formula:hr2", std::move(hr2));
            }
            break;
        case Poly::Gamma:
            if (want_brute)
                out.emplace_back("brute", dist_brute(StatId::gamma(x, y), n, opts));
            if (!all && method == "rec")
                throw NoClosedForm("no recurrence for Gamma");
            if (want_formula) {
                if (all) {
                    // only include the closed form when the hypothesis holds
                    if (disjoint_on(x, y, n) && covers_on(x, y, n))
                        out.emplace_back("formula", dist_gamma_formula(x, y, n));
                } else {
                    out.emplace_back("formula", dist_gamma_formula(x, y, n));
                }
            }
            break;
    }
    return out;
}

}  // namespace permstat
