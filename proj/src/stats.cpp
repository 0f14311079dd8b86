#include "permstat/stats.hpp"

namespace permstat {

StatId StatId::family_id(FamilyKind f, SetSpec x, SetSpec y) {
    StatId id;
    id.kind = Kind::Family;
    id.family = f;
    id.x = std::move(x);
    id.y = std::move(y);
    return id;
}

StatId StatId::named(int i) {
    if (i < 1 || i > 17)
        throw ParseError("named statistic index " + std::to_string(i) +
                         " out of range s1..s17");
    StatId id;
    id.kind = Kind::Named;
    id.index = i;
    return id;
}

StatId StatId::t(int i) {
    if (i < 1 || i > 3)
        throw ParseError("t-statistic index " + std::to_string(i) +
                         " out of range t1..t3");
    StatId id;
    id.kind = Kind::T;
    id.index = i;
    return id;
}

namespace {

const char* family_name(FamilyKind f) {
    switch (f) {
        case FamilyKind::Des:
            return "des";
        case FamilyKind::Adj:
            return "adj";
        case FamilyKind::Val:
            return "val";
        case FamilyKind::Exc:
            return "exc";
        case FamilyKind::Gamma:
            return "gamma";
    }
    return "?";
}

int parse_index(const std::string& text, size_t from, int lo, int hi) {
    try {
        size_t pos = 0;
        int v = std::stoi(text.substr(from), &pos);
        if (pos != text.size() - from || v < lo || v > hi)
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad statistic '" + text + "'");
    }
}

}  // namespace

StatId StatId::parse(const std::string& text) {
    if (!text.empty() && text[0] == 's' && text.find(':') == std::string::npos)
        return named(parse_index(text, 1, 1, 17));
    if (!text.empty() && text[0] == 't' && text.find(':') == std::string::npos)
        return t(parse_index(text, 1, 1, 3));
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("bad statistic '" + text + "' (want des:X;Y, adj:X;Y, "
                         "val:X;Y, exc:X;Y, gamma:X;Y, s1..s17 or t1..t3)");
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    FamilyKind f;
    if (head == "des")
        f = FamilyKind::Des;
    else if (head == "adj")
        f = FamilyKind::Adj;
    else if (head == "val")
        f = FamilyKind::Val;
    else if (head == "exc")
        f = FamilyKind::Exc;
    else if (head == "gamma")
        f = FamilyKind::Gamma;
    else
        throw ParseError("bad statistic family '" + head + "'");
    auto semi = rest.find(';');
    if (semi == std::string::npos)
        throw ParseError("bad statistic '" + text + "': missing ';' between sets");
    return family_id(f, SetSpec::parse(rest.substr(0, semi)),
                     SetSpec::parse(rest.substr(semi + 1)));
}

std::string StatId::to_string() const {
    switch (kind) {
        case Kind::Family:
            return std::string(family_name(family)) + ":" + x.to_string() + ";" +
                   y.to_string();
        case Kind::Named:
            return "s" + std::to_string(index);
        case Kind::T:
            return "t" + std::to_string(index);
    }
    return {};
}

int eval_des(const Permutation& p, const SetSpec& x, const SetSpec& y) {
    int c = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i) > p.at(i + 1) && x.contains(p.at(i)) && y.contains(p.at(i + 1)))
            ++c;
    return c;
}

int eval_adj(const Permutation& p, const SetSpec& x, const SetSpec& y) {
    int c = 0;
    for (int i = 1; i < p.size(); ++i)
        if (x.contains(p.at(i)) && y.contains(p.at(i + 1)))
            ++c;
    return c;
}

int eval_val(const Permutation& p, const SetSpec& x, const SetSpec& y) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (x.contains(i) && y.contains(p.at(i)))
            ++c;
    return c;
}

int eval_exc(const Permutation& p, const SetSpec& x, const SetSpec& y) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) > i && x.contains(i) && y.contains(p.at(i)))
            ++c;
    return c;
}

int eval_gamma(const Permutation& p, const SetSpec& x, const SetSpec& y) {
    // size of {i in X : p_i in X} ∪ {i in Y : p_i in Y} — a union of
    // position sets, so overlapping X and Y never double-count a position
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        if ((x.contains(i) && x.contains(p.at(i))) ||
            (y.contains(i) && y.contains(p.at(i))))
            ++c;
    return c;
}

int eval_s17(const Permutation& p) {
    std::vector<int> pos(static_cast<size_t>(p.size()) + 1);
    for (int i = 1; i <= p.size(); ++i)
        pos[static_cast<size_t>(p.at(i))] = i;
    int best = 0, last = 0;
    for (int v = 1; v <= p.size(); ++v) {
        if (pos[static_cast<size_t>(v)] > last) {
            best = v;
            last = pos[static_cast<size_t>(v)];
        } else {
            break;
        }
    }
    return best;
}

std::array<int, 3> eval_t_stats(const Permutation& p) {
    std::array<int, 3> t{0, 0, 0};
    for (int i = 1; i < p.size(); ++i) {
        int a = p.at(i), b = p.at(i + 1);
        bool is10 = a > b && a % 2 == 1;      // descent with odd top
        bool is12 = a % 2 == 1 && b % 2 == 1;  // (odd,odd) adjacency
        if (is10 && !is12)
            ++t[0];
        else if (is12 && !is10)
            ++t[1];
        else if (is10 && is12)
            ++t[2];
    }
    return t;
}

namespace {

// S1..S16 computed directly from parity tests — deliberately not routed
// through the SetSpec machinery so the Table-1 aliases stay independent
// evidence (their equality with table1_family is a tested property).
int eval_named(const Permutation& p, int idx) {
    const int n = p.size();
    auto even = [](int v) { return v % 2 == 0; };
    auto odd = [](int v) { return v % 2 == 1; };
    int c = 0;
    switch (idx) {
        case 1:  // des, top even
            for (int i = 1; i < n; ++i)
                c += p.at(i) > p.at(i + 1) && even(p.at(i));
            return c;
        case 2:  // exc with even value
            for (int i = 1; i <= n; ++i)
                c += p.at(i) > i && even(p.at(i));
            return c;
        case 3:  // even position, even value
            for (int i = 1; i <= n; ++i)
                c += even(i) && even(p.at(i));
            return c;
        case 4:  // des, bottom odd
            for (int i = 1; i < n; ++i)
                c += p.at(i) > p.at(i + 1) && odd(p.at(i + 1));
            return c;
        case 5:  // exc at odd position
            for (int i = 1; i <= n; ++i)
                c += p.at(i) > i && odd(i);
            return c;
        case 6:  // odd position, even value
            for (int i = 1; i <= n; ++i)
                c += odd(i) && even(p.at(i));
            return c;
        case 7:  // even position, odd value
            for (int i = 1; i <= n; ++i)
                c += even(i) && odd(p.at(i));
            return c;
        case 8:  // (odd, even) adjacency
            for (int i = 1; i < n; ++i)
                c += odd(p.at(i)) && even(p.at(i + 1));
            return c;
        case 9:  // (even, odd) adjacency
            for (int i = 1; i < n; ++i)
                c += even(p.at(i)) && odd(p.at(i + 1));
            return c;
        case 10:  // des, top odd
            for (int i = 1; i < n; ++i)
                c += p.at(i) > p.at(i + 1) && odd(p.at(i));
            return c;
        case 11:  // exc with odd value
            for (int i = 1; i <= n; ++i)
                c += p.at(i) > i && odd(p.at(i));
            return c;
        case 12:  // (odd, odd) adjacency
            for (int i = 1; i < n; ++i)
                c += odd(p.at(i)) && odd(p.at(i + 1));
            return c;
        case 13:  // des, bottom even
            for (int i = 1; i < n; ++i)
                c += p.at(i) > p.at(i + 1) && even(p.at(i + 1));
            return c;
        case 14:  // exc at even position
            for (int i = 1; i <= n; ++i)
                c += p.at(i) > i && even(i);
            return c;
        case 15:  // odd position, odd value
            for (int i = 1; i <= n; ++i)
                c += odd(i) && odd(p.at(i));
            return c;
        case 16:  // (even, even) adjacency
            for (int i = 1; i < n; ++i)
                c += even(p.at(i)) && even(p.at(i + 1));
            return c;
        case 17:
            return eval_s17(p);
    }
    throw ParseError("named statistic index out of range");
}

}  // namespace

int eval_stat(const Permutation& p, const StatId& id) {
    switch (id.kind) {
        case StatId::Kind::Family:
            switch (id.family) {
                case FamilyKind::Des:
                    return eval_des(p, id.x, id.y);
                case FamilyKind::Adj:
                    return eval_adj(p, id.x, id.y);
                case FamilyKind::Val:
                    return eval_val(p, id.x, id.y);
                case FamilyKind::Exc:
                    return eval_exc(p, id.x, id.y);
                case FamilyKind::Gamma:
                    return eval_gamma(p, id.x, id.y);
            }
            break;
        case StatId::Kind::Named:
            return eval_named(p, id.index);
        case StatId::Kind::T:
            return eval_t_stats(p)[static_cast<size_t>(id.index) - 1];
    }
    throw ParseError("unhandled statistic");
}

StatId table1_family(int i) {
    const SetSpec N = SetSpec::all(), E = SetSpec::even(), O = SetSpec::odd();
    switch (i) {
        case 1:
            return StatId::des(E, N);
        case 2:
            return StatId::exc(N, E);
        case 3:
            return StatId::val(E, E);
        case 4:
            return StatId::des(N, O);
        case 5:
            return StatId::exc(O, N);
        case 6:
            return StatId::val(O, E);
        case 7:
            return StatId::val(E, O);
        case 8:
            return StatId::adj(O, E);
        case 9:
            return StatId::adj(E, O);
        case 10:
            return StatId::des(O, N);
        case 11:
            return StatId::exc(N, O);
        case 12:
            return StatId::adj(O, O);
        case 13:
            return StatId::des(N, E);
        case 14:
            return StatId::exc(E, N);
        case 15:
            return StatId::val(O, O);
        case 16:
            return StatId::adj(E, E);
    }
    throw ParseError("table-1 index " + std::to_string(i) + " out of range 1..16");
}

}  // namespace permstat
