#include "permstat/set_spec.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace permstat {

SetSpec SetSpec::all() {
    SetSpec s;
    s.kind_ = Kind::All;
    return s;
}

SetSpec SetSpec::even() {
    SetSpec s;
    s.kind_ = Kind::Even;
    return s;
}

SetSpec SetSpec::odd() {
    SetSpec s;
    s.kind_ = Kind::Odd;
    return s;
}

SetSpec SetSpec::residue(long long i, long long k) {
    if (i < 0 || k < 2)
        throw ParseError("bad residue class res:" + std::to_string(i) + "," +
                         std::to_string(k) + " (need offset >= 0, modulus >= 2)");
    SetSpec s;
    s.kind_ = Kind::Residue;
    s.i_ = i;
    s.k_ = k;
    return s;
}

SetSpec SetSpec::explicit_set(std::vector<long long> values) {
    for (long long v : values)
        if (v < 1)
            throw ParseError("explicit set element " + std::to_string(v) +
                             " is not a positive integer");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    SetSpec s;
    s.kind_ = Kind::Explicit;
    s.values_ = std::move(values);
    return s;
}

SetSpec SetSpec::union_of(std::vector<SetSpec> parts) {
    if (parts.empty())
        throw ParseError("empty union");
    if (parts.size() == 1)
        return parts.front();
    SetSpec s;
    s.kind_ = Kind::Union;
    s.parts_ = std::move(parts);
    return s;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& tok, const std::string& context) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + tok + "' in " + context);
    }
}

SetSpec parse_atom(const std::string& tok) {
    if (tok == "all")
        return SetSpec::all();
    if (tok == "even")
        return SetSpec::even();
    if (tok == "odd")
        return SetSpec::odd();
    if (tok.rfind("res:", 0) == 0) {
        auto nums = split(tok.substr(4), ',');
        if (nums.size() != 2)
            throw ParseError("bad set spec token '" + tok + "' (want res:i,k)");
        return SetSpec::residue(parse_ll(nums[0], tok), parse_ll(nums[1], tok));
    }
    if (tok.rfind("set:", 0) == 0) {
        std::string rest = tok.substr(4);
        std::vector<long long> vals;
        if (!rest.empty())
            for (const auto& piece : split(rest, ','))
                vals.push_back(parse_ll(piece, tok));
        return SetSpec::explicit_set(std::move(vals));
    }
    throw ParseError("bad set spec token '" + tok + "'");
}

}  // namespace

SetSpec SetSpec::parse(const std::string& text) {
    if (text.empty())
        throw ParseError("empty set spec");
    std::vector<SetSpec> parts;
    for (const auto& tok : split(text, '|'))
        parts.push_back(parse_atom(tok));
    return union_of(std::move(parts));
}

std::string SetSpec::to_string() const {
    switch (kind_) {
        case Kind::All:
            return "all";
        case Kind::Even:
            return "even";
        case Kind::Odd:
            return "odd";
        case Kind::Residue:
            return "res:" + std::to_string(i_) + "," + std::to_string(k_);
        case Kind::Explicit: {
            std::string out = "set:";
            for (size_t t = 0; t < values_.size(); ++t)
                out += (t ? "," : "") + std::to_string(values_[t]);
            return out;
        }
        case Kind::Union: {
            std::string out;
            for (size_t t = 0; t < parts_.size(); ++t)
                out += (t ? "|" : "") + parts_[t].to_string();
            return out;
        }
    }
    return {};
}

bool SetSpec::contains(long long m) const {
    if (m < 1)
        return false;
    switch (kind_) {
        case Kind::All:
            return true;
        case Kind::Even:
            return m % 2 == 0;
        case Kind::Odd:
            return m % 2 == 1;
        case Kind::Residue:
            return m >= i_ && (m - i_) % k_ == 0;
        case Kind::Explicit:
            return std::binary_search(values_.begin(), values_.end(), m);
        case Kind::Union:
            for (const auto& p : parts_)
                if (p.contains(m))
                    return true;
            return false;
    }
    return false;
}

long long SetSpec::prefix_count(long long n) const {
    if (n < 1)
        return 0;
    switch (kind_) {
        case Kind::All:
            return n;
        case Kind::Even:
            return n / 2;
        case Kind::Odd:
            return (n + 1) / 2;
        case Kind::Residue:
            if (i_ == 0)
                return n / k_;
            return n < i_ ? 0 : (n - i_) / k_ + 1;
        case Kind::Explicit: {
            long long c = 0;
            for (long long v : values_)
                if (v <= n)
                    ++c;
            return c;
        }
        case Kind::Union: {
            // Parts may overlap, so count by membership scan.
            long long c = 0;
            for (long long m = 1; m <= n; ++m)
                if (contains(m))
                    ++c;
            return c;
        }
    }
    return 0;
}

std::vector<long long> SetSpec::members(long long n) const {
    std::vector<long long> out;
    for (long long m = 1; m <= n; ++m)
        if (contains(m))
            out.push_back(m);
    return out;
}

long long alpha(const SetSpec& a, long long n, long long j) {
    // complement elements of {j+1..n}
    return (n - j) - (a.prefix_count(n) - a.prefix_count(j));
}

long long beta(const SetSpec& a, [[maybe_unused]] long long n, long long j) {
    // complement elements of {1..j-1}; n only fixes the window notation
    return (j - 1) - a.prefix_count(j - 1);
}

bool same_on(const SetSpec& s, const SetSpec& t, long long n) {
    for (long long m = 1; m <= n; ++m)
        if (s.contains(m) != t.contains(m))
            return false;
    return true;
}

bool disjoint_on(const SetSpec& x, const SetSpec& y, long long n) {
    for (long long m = 1; m <= n; ++m)
        if (x.contains(m) && y.contains(m))
            return false;
    return true;
}

bool covers_on(const SetSpec& x, const SetSpec& y, long long n) {
    for (long long m = 1; m <= n; ++m)
        if (!x.contains(m) && !y.contains(m))
            return false;
    return true;
}

namespace {

// Recognize a spec as one full residue class i+kN with canonical offset in
// [1..k] (offset 0 and offset k name the same set). Whole-line parities map
// to their modulus-2 classes; anything else is not a single class.
struct ResidueClass {
    long long i, k;
};

std::optional<ResidueClass> as_residue_class(const SetSpec& s) {
    switch (s.kind()) {
        case SetSpec::Kind::Even:
            return ResidueClass{2, 2};
        case SetSpec::Kind::Odd:
            return ResidueClass{1, 2};
        case SetSpec::Kind::Residue: {
            long long i = s.res_offset(), k = s.res_modulus();
            if (i > k)
                return std::nullopt;  // {i, i+k, ...} is not the full class i mod k
            return ResidueClass{i == 0 ? k : i, k};
        }
        default:
            return std::nullopt;
    }
}

// Prefer the named parity spellings where they apply; fold a union of classes
// covering every offset of its modulus into All.
SetSpec pretty_residue(long long i, long long k) {
    // Note offsets above k arise in the derived sets (e.g. res:3,2 =
    // {3,5,...}) and genuinely differ from the class of i mod k.
    if (k == 2 && i == 1)
        return SetSpec::odd();
    if (k == 2 && i == 2)
        return SetSpec::even();
    return SetSpec::residue(i, k);
}

SetSpec pretty_union(std::vector<ResidueClass> classes) {
    const long long k = classes.front().k;
    std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
    bool full = true;
    for (const auto& c : classes) {
        if (c.i >= 1 && c.i <= k)
            seen[static_cast<size_t>(c.i)] = true;
        else
            full = false;
    }
    for (long long i = 1; i <= k; ++i)
        full = full && seen[static_cast<size_t>(i)];
    if (full)
        return SetSpec::all();
    std::vector<SetSpec> parts;
    for (const auto& c : classes)
        parts.push_back(pretty_residue(c.i, c.k));
    return SetSpec::union_of(std::move(parts));
}

[[noreturn]] void no_construction(const SetSpec& x, const SetSpec& y,
                                  const std::string& why) {
    throw NoConstruction("no known construction for (X,Y) = (" + x.to_string() +
                         ", " + y.to_string() + "): " + why);
}

ABPair derive(const SetSpec& x, const SetSpec& y, bool value_case) {
    auto rx = as_residue_class(x), ry = as_residue_class(y);
    if (!rx || !ry || rx->k != ry->k)
        no_construction(x, y, "supported patterns are residue classes of one modulus");
    const long long k = rx->k;
    ABPair out{SetSpec::all(), SetSpec::all()};
    if (rx->i == ry->i) {
        // X = Y = i+kN.
        const long long i = rx->i;
        if (value_case) {
            if (i == 1)
                no_construction(x, y, "1 \xE2\x88\x88 X forces b_0 = 1, impossible");
            out = {pretty_residue(i, k),
                   pretty_union({{i - 1, k}, {i, k}})};
        } else {
            out = {pretty_residue(i, k),
                   pretty_union({{i, k}, {i + 1, k}})};
        }
    } else {
        // Two distinct classes of one modulus; both pairing theorems use the
        // same (A,B) here.
        long long lo = std::min(rx->i, ry->i), hi = std::max(rx->i, ry->i);
        out = {pretty_union({{lo, k}, {hi, k}}), pretty_residue(lo, k)};
    }
    if (!check_b_conditions(x, y, out, value_case, 50))
        throw std::logic_error("derived (A,B) violates its side conditions for (" +
                               x.to_string() + ", " + y.to_string() + ")");
    return out;
}

}  // namespace

ABPair derive_AB_for_adjacency(const SetSpec& x, const SetSpec& y) {
    return derive(x, y, /*value_case=*/false);
}

ABPair derive_AB_for_value(const SetSpec& x, const SetSpec& y) {
    return derive(x, y, /*value_case=*/true);
}

bool check_b_conditions(const SetSpec& x, const SetSpec& y, const ABPair& ab,
                        bool value_case, long long limit) {
    for (long long m = 0; m <= limit; ++m) {
        bool inx = x.contains(m + 1), iny = y.contains(m + 1);
        if (ab.a.contains(m + 1) != (inx || iny))
            return false;
        long long expected;
        if (inx && iny)
            expected = (value_case ? 1 : 0) + x.prefix_count(m) + y.prefix_count(m);
        else if (inx)
            expected = y.prefix_count(m);
        else if (iny)
            expected = x.prefix_count(m);
        else
            continue;
        if (ab.b.prefix_count(m) != expected)
            return false;
    }
    return true;
}

}  // namespace permstat
