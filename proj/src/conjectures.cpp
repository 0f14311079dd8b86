#include "permstat/conjectures.hpp"

#include <json.hpp>

#include <stdexcept>

#include "permstat/distribution.hpp"
#include "permstat/transforms.hpp"

namespace permstat {

long long JointDistribution::total() const {
    long long t = 0;
    for (const auto& [tuple, c] : counts)
        t += c;
    return t;
}

std::vector<long long> JointDistribution::marginal(std::size_t index) const {
    if (index >= stats.size())
        throw std::out_of_range("marginal index out of range");
    std::vector<long long> row;
    for (const auto& [tuple, c] : counts) {
        const auto s = static_cast<std::size_t>(tuple[index]);
        if (s >= row.size())
            row.resize(s + 1, 0);
        row[s] += c;
    }
    return row;
}

JointDistribution joint_dist(int n, const std::vector<StatId>& stats, int cap) {
    JointDistribution out;
    out.n = n;
    out.stats = stats;
    std::vector<int> tuple(stats.size());
    enumerate_sn(n, cap, [&](const Permutation& p) {
        for (std::size_t i = 0; i < stats.size(); ++i)
            tuple[i] = eval_stat(p, stats[i]);
        ++out.counts[tuple];
    });
    return out;
}

namespace {

// Count-map equality with the lexicographically smallest differing tuple as
// witness (std::map keeps tuples in lex order, so a merge walk finds it).
ConjectureResult compare_tables(std::string name, int n, const JointDistribution& lhs,
                                const JointDistribution& rhs) {
    ConjectureResult r;
    r.name = std::move(name);
    r.n = n;
    r.lhs_table_size = lhs.counts.size();
    r.rhs_table_size = rhs.counts.size();
    auto a = lhs.counts.begin();
    auto b = rhs.counts.begin();
    while (a != lhs.counts.end() || b != rhs.counts.end()) {
        if (b == rhs.counts.end() || (a != lhs.counts.end() && a->first < b->first)) {
            r.holds = false;
            r.witness = a->first;
            return r;
        }
        if (a == lhs.counts.end() || b->first < a->first) {
            r.holds = false;
            r.witness = b->first;
            return r;
        }
        if (a->second != b->second) {
            r.holds = false;
            r.witness = a->first;
            return r;
        }
        ++a;
        ++b;
    }
    return r;
}

}  // namespace

ConjectureResult test_conjecture1(int n, int cap) {
    const StatId s10 = StatId::named(10), s12 = StatId::named(12),
                 s17 = StatId::named(17);
    return compare_tables("conjecture1", n, joint_dist(n, {s10, s12, s17}, cap),
                          joint_dist(n, {s12, s10, s17}, cap));
}

ConjectureResult test_conjecture2(int n, int cap) {
    const StatId t1 = StatId::t(1), t2 = StatId::t(2), t3 = StatId::t(3),
                 s17 = StatId::named(17);
    return compare_tables("conjecture2", n, joint_dist(n, {t1, t2, t3, s17}, cap),
                          joint_dist(n, {t2, t1, t3, s17}, cap));
}

bool test_gamma_theorem(const SetSpec& x, const SetSpec& y, int n, int cap) {
    const Distribution brute = dist_brute(StatId::gamma(x, y), n, BruteOptions{cap, 1});
    const Distribution formula = dist_gamma_formula(x, y, n);
    return brute.same_coeffs(formula);
}

std::vector<JumpInstance> gamma_jump_demo(int n, const SetSpec& x, const SetSpec& y,
                                          int cap) {
    std::vector<JumpInstance> out;
    enumerate_sn(n, cap, [&](const Permutation& p) {
        const int before = eval_gamma(p, x, y);
        for (int i = 1; i <= n + 1; ++i) {
            const int after = eval_gamma(insert_I(p, i), x, y);
            const int d = after - before;
            if (d < -2 || d > 2)
                throw std::logic_error("gamma changed by more than 2 on insertion");
            if (d == 2)
                out.push_back(JumpInstance{p, i, before, after});
        }
    });
    return out;
}

namespace {

nlohmann::json result_json(const ConjectureResult& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["holds"] = r.holds;
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    j["table_sizes"] = {{"lhs", r.lhs_table_size}, {"rhs", r.rhs_table_size}};
    return j;
}

}  // namespace

std::string conjecture_report_json(const ConjectureResult& r) {
    nlohmann::json j = result_json(r);
    j["even_odd_split"] = (r.n % 2 == 0) ? "even" : "odd";
    return j.dump();
}

std::string conjecture_report_json(const std::vector<ConjectureResult>& results) {
    nlohmann::json j;
    j["holds"] = true;
    j["witness"] = nullptr;
    j["n"] = 0;
    j["per_n"] = nlohmann::json::array();
    nlohmann::json even = nlohmann::json::array(), odd = nlohmann::json::array();
    for (const ConjectureResult& r : results) {
        if (!r.name.empty() && !j.contains("name"))
            j["name"] = r.name;
        j["per_n"].push_back(result_json(r));
        j["n"] = std::max(j["n"].get<int>(), r.n);
        if (r.holds)
            ((r.n % 2 == 0) ? even : odd).push_back(r.n);
        else if (j["witness"].is_null()) {
            j["holds"] = false;
            j["witness"] = {{"n", r.n},
                            {"tuple", r.witness ? nlohmann::json(*r.witness)
                                                : nlohmann::json(nullptr)}};
        }
    }
    nlohmann::json sizes = nlohmann::json::array();
    for (const ConjectureResult& r : results)
        sizes.push_back({{"n", r.n}, {"lhs", r.lhs_table_size}, {"rhs", r.rhs_table_size}});
    j["table_sizes"] = sizes;
    j["even_odd_split"] = {{"even", even}, {"odd", odd}};
    return j.dump(2);
}

}  // namespace permstat
