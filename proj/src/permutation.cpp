#include "permstat/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permstat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw ParseError("not a permutation of [" + std::to_string(n) +
                             "]: entry " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(Trusted{}, std::move(e));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> e;
    if (text.find(',') != std::string::npos) {
        std::string cur;
        auto flush = [&] {
            try {
                size_t pos = 0;
                int v = std::stoi(cur, &pos);
                if (pos != cur.size())
                    throw std::invalid_argument(cur);
                e.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad permutation entry '" + cur + "'");
            }
            cur.clear();
        };
        for (char c : text) {
            if (c == ',')
                flush();
            else
                cur += c;
        }
        flush();
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError("bad permutation character '" + std::string(1, c) +
                                 "' (digits 1-9, or comma-separated entries)");
            e.push_back(c - '0');
        }
    }
    return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : entries_)
            out += static_cast<char>('0' + v);
    } else {
        for (size_t t = 0; t < entries_.size(); ++t)
            out += (t ? "," : "") + std::to_string(entries_[t]);
    }
    return out;
}

Permutation Permutation::reversed() const {
    std::vector<int> e(entries_.rbegin(), entries_.rend());
    return Permutation(Trusted{}, std::move(e));
}

Permutation Permutation::inverse() const {
    std::vector<int> e(entries_.size());
    for (int i = 1; i <= size(); ++i)
        e[static_cast<size_t>(at(i)) - 1] = i;
    return Permutation(Trusted{}, std::move(e));
}

CycleForm to_cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    CycleForm cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<size_t>(start)])
            continue;
        std::vector<int> cyc;
        int m = start;
        while (!seen[static_cast<size_t>(m)]) {
            seen[static_cast<size_t>(m)] = true;
            cyc.push_back(m);
            m = p.at(m);
        }
        // rotate so the largest element sits last
        auto big = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), big + 1, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.back() < b.back();  // canonical: largest element is last
              });
    return cycles;
}

Permutation from_cycles(const CycleForm& cycles) {
    int n = 0;
    for (const auto& c : cycles) {
        if (c.empty())
            throw ParseError("empty cycle");
        n += static_cast<int>(c.size());
    }
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (const auto& c : cycles) {
        for (size_t t = 0; t < c.size(); ++t) {
            int a = c[t], b = c[(t + 1) % c.size()];
            if (a < 1 || a > n || e[static_cast<size_t>(a) - 1] != 0)
                throw ParseError("cycles do not partition [" + std::to_string(n) +
                                 "]: element " + std::to_string(a));
            e[static_cast<size_t>(a) - 1] = b;
        }
    }
    return Permutation(std::move(e));
}

std::string cycles_to_string(const CycleForm& cycles) {
    std::string out;
    for (const auto& c : cycles) {
        // Digit runs for single-digit elements ("(216)"); space-separated
        // once any element needs two digits ("(3 12)").
        bool wide = std::any_of(c.begin(), c.end(), [](int v) { return v > 9; });
        out += '(';
        for (size_t t = 0; t < c.size(); ++t) {
            if (wide && t)
                out += ' ';
            out += std::to_string(c[t]);
        }
        out += ')';
    }
    return out;
}

void enumerate_sn(int n, int cap,
                  const std::function<void(const Permutation&)>& fn) {
    if (n < 0)
        throw ParseError("negative permutation length");
    if (n > cap)
        throw EnumerationCapError("refusing to enumerate S_" + std::to_string(n) +
                                  ": cap is " + std::to_string(cap) +
                                  " (raise enumeration_cap to override)");
    std::vector<int> work(static_cast<size_t>(n));
    std::iota(work.begin(), work.end(), 1);
    Permutation p(Permutation::Trusted{}, std::move(work));
    for (bool more = true; more;) {
        fn(p);
        more = std::next_permutation(p.entries_.begin(), p.entries_.end());
    }
}

void for_each_arrangement(std::vector<int>& work, int fixed,
                          const std::function<void(const std::vector<int>&)>& fn) {
    auto tail = work.begin() + fixed;
    for (bool more = true; more;) {
        fn(work);
        more = std::next_permutation(tail, work.end());
    }
}

}  // namespace permstat
