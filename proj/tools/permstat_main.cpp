// permstat: command-line front end for the permutation-statistic library.
//
// Subcommands: stat, dist, verify, foata, theta, gamma-demo, conjectures.
// Exit codes: 0 success; 1 theorem/identity failure; 2 conjecture
// counterexample (1 wins when both occur); 64 bad input; 70 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "permstat/cache.hpp"
#include "permstat/config.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/distribution.hpp"
#include "permstat/identities.hpp"
#include "permstat/transforms.hpp"
#include "permstat/verify.hpp"

namespace {

using namespace permstat;

struct GlobalFlags {
    std::string config_path;
    std::string cache_dir;
    std::string format;
    std::string parallelism;
    int cap = -1;

    // defaults -> config file -> environment -> command-line flags
    Config resolve() const {
        Config cfg;
        if (!config_path.empty())
            cfg = load_config_file(config_path);
        apply_env_overrides(cfg);
        if (!cache_dir.empty())
            cfg.cache_dir = cache_dir;
        if (!format.empty())
            cfg.output_format = format;
        if (!parallelism.empty())
            cfg.parallelism = parse_parallelism_value(parallelism);
        if (cap >= 0)
            cfg.enumeration_cap = cap;
        return cfg;
    }
};

std::string csv_row(const std::string& label, const Distribution& d) {
    std::string out = label;
    for (const Bigint& c : d.coeffs)
        out += "," + to_decimal(c);
    return out;
}

int run_stat(const std::string& perm_text, const std::string& stat_text) {
    const Permutation p = Permutation::parse(perm_text);
    const StatId id = StatId::parse(stat_text);
    std::cout << eval_stat(p, id) << "\n";
    return 0;
}

int run_dist(const GlobalFlags& flags, const std::string& poly_text,
             const std::string& x_text, const std::string& y_text, int n,
             const std::string& method) {
    const Config cfg = flags.resolve();
    const Poly poly = parse_poly(poly_text);
    const SetSpec x = SetSpec::parse(x_text);
    const SetSpec y = SetSpec::parse(y_text);
    const BruteOptions opts{cfg.enumeration_cap, cfg.workers()};

    auto rows = compute_poly(poly, x, y, n, method, opts);
    if (!cfg.cache_dir.empty())
        for (const auto& [label, d] : rows)
            cache_store(cfg.cache_dir, d, label);

    bool agree = true;
    for (const auto& [label, d] : rows)
        agree = agree && d.same_coeffs(rows.front().second);

    if (cfg.output_format == "json") {
        if (rows.size() == 1) {
            std::cout << distribution_to_json(rows.front().second, rows.front().first)
                      << "\n";
        } else {
            nlohmann::json j;
            j["agree"] = agree;
            j["rows"] = nlohmann::json::array();
            for (const auto& [label, d] : rows)
                j["rows"].push_back(nlohmann::json::parse(distribution_to_json(d, label)));
            std::cout << j.dump(2) << "\n";
        }
    } else {
        for (const auto& [label, d] : rows)
            std::cout << csv_row(label, d) << "\n";
        if (rows.size() > 1)
            std::cout << "agreement," << (agree ? "true" : "false") << "\n";
    }
    // Disagreement between computation paths is a theorem failure.
    return agree ? 0 : 1;
}

int run_verify(const GlobalFlags& flags, const std::string& suite, int max_n) {
    const Config cfg = flags.resolve();
    const auto results = run_suites(suite, max_n, cfg);
    for (const SuiteResult& r : results) {
        std::cout << "suite " << r.name << ": " << (r.checks - r.failures) << "/"
                  << r.checks << " checks passed";
        if (r.counterexamples > 0)
            std::cout << ", " << r.counterexamples << " conjecture counterexample(s)";
        std::cout << "\n";
        for (const std::string& line : r.lines)
            std::cout << "  " << line << "\n";
    }
    const int code = exit_code_for(results);
    std::cout << (code == 0 ? "PASS" : code == 1 ? "FAIL" : "COUNTEREXAMPLE") << "\n";
    return code;
}

int run_foata(const std::string& perm_text, bool invert, bool trace) {
    const Permutation p = Permutation::parse(perm_text);
    const Permutation out = invert ? foata_inverse(p) : foata(p);
    // The trace shows the canonical cycle form being read off (the source's
    // cycles forward, the recovered preimage's cycles under --invert).
    if (trace)
        std::cout << cycles_to_string(to_cycles(invert ? out : p)) << "\n";
    std::cout << out.to_string() << "\n";
    return 0;
}

int run_theta(const GlobalFlags& flags, int n, const std::string& x_text,
              const std::string& y_text) {
    const Config cfg = flags.resolve();
    const SetSpec x = SetSpec::parse(x_text);
    const SetSpec y = SetSpec::parse(y_text);
    const BijectionTable table = build_theta(n, x, y, cfg.enumeration_cap);
    if (cfg.output_format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [src, img] : table.forward)
            rows.push_back({{"sigma", src.to_string()},
                            {"theta_of_sigma", img.to_string()},
                            {"adj_value", eval_adj(src, x, y)},
                            {"val_value", eval_val(img, x, y)}});
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& [src, img] : table.forward)
            std::cout << src.to_string() << "," << img.to_string() << ","
                      << eval_adj(src, x, y) << "," << eval_val(img, x, y) << "\n";
    }
    return 0;
}

int run_gamma_demo(const GlobalFlags& flags, int n, const std::string& x_text,
                   const std::string& y_text) {
    const Config cfg = flags.resolve();
    const SetSpec x = SetSpec::parse(x_text);
    const SetSpec y = SetSpec::parse(y_text);
    const auto found = gamma_jump_demo(n, x, y, cfg.enumeration_cap);
    if (cfg.output_format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const JumpInstance& inst : found)
            rows.push_back({{"sigma", inst.sigma.to_string()},
                            {"locus", inst.locus},
                            {"before", inst.before},
                            {"after", inst.after}});
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const JumpInstance& inst : found)
            std::cout << inst.sigma.to_string() << "," << inst.locus << ","
                      << inst.before << "," << inst.after << "\n";
    }
    return 0;
}

int run_conjectures(const GlobalFlags& flags, int max_n) {
    const Config cfg = flags.resolve();
    std::vector<ConjectureResult> c1, c2;
    for (int n = 1; n <= std::min(max_n, cfg.enumeration_cap); ++n) {
        c1.push_back(test_conjecture1(n, cfg.enumeration_cap));
        c2.push_back(test_conjecture2(n, cfg.enumeration_cap));
    }
    nlohmann::json out;
    out["conjecture1"] = nlohmann::json::parse(conjecture_report_json(c1));
    out["conjecture2"] = nlohmann::json::parse(conjecture_report_json(c2));
    std::cout << out.dump(2) << "\n";
    const bool holds = out["conjecture1"]["holds"].get<bool>() &&
                       out["conjecture2"]["holds"].get<bool>();
    return holds ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (X,Y)-permutation-statistic computations: statistics, "
                 "distribution polynomials, bijections, identity sweeps, and "
                 "conjecture testing"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--config", flags.config_path, "config file (key = value lines)");
    app.add_option("--cache-dir", flags.cache_dir, "cache directory for coefficient rows");
    app.add_option("--format", flags.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--parallelism", flags.parallelism, "worker count or 'auto'");
    app.add_option("--cap", flags.cap, "enumeration cap (largest n for S_n sweeps)");

    int exit_code = 0;

    auto* stat = app.add_subcommand("stat", "evaluate one statistic on one permutation");
    std::string stat_perm, stat_id;
    stat->add_option("--perm", stat_perm, "permutation (digits, or comma-separated)")
        ->required();
    stat->add_option("--stat", stat_id,
                     "statistic: des|adj|val|exc|gamma:X;Y, s1..s17, t1..t3")
        ->required();
    stat->callback([&] { exit_code = run_stat(stat_perm, stat_id); });

    auto* dist = app.add_subcommand("dist", "distribution coefficient row over S_n");
    std::string dist_poly, dist_x = "all", dist_y = "all", dist_method = "all";
    int dist_n = 0;
    dist->add_option("--poly", dist_poly, "polynomial family: D|A|V|E|Gamma")->required();
    dist->add_option("--x", dist_x, "set spec X (all|even|odd|res:i,k|set:a,b,..|unions with |)");
    dist->add_option("--y", dist_y, "set spec Y");
    dist->add_option("--n", dist_n, "permutation length")->required();
    dist->add_option("--method", dist_method, "brute|rec|formula|all");
    dist->callback([&] {
        exit_code = run_dist(flags, dist_poly, dist_x, dist_y, dist_n, dist_method);
    });

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all";
    int verify_max_n = 8;
    verify->add_option("--suite", verify_suite,
                       "table1|identities|bijections|gamma|conjectures|all");
    verify->add_option("--max-n", verify_max_n, "largest length to verify");
    verify->callback([&] { exit_code = run_verify(flags, verify_suite, verify_max_n); });

    auto* foata_cmd = app.add_subcommand("foata", "apply the cycle-reading bijection");
    std::string foata_perm;
    bool foata_invert = false, foata_trace = false;
    foata_cmd->add_option("--perm", foata_perm, "permutation")->required();
    foata_cmd->add_flag("--invert", foata_invert, "apply the inverse direction");
    foata_cmd->add_flag("--trace", foata_trace, "print the cycle form first");
    foata_cmd->callback(
        [&] { exit_code = run_foata(foata_perm, foata_invert, foata_trace); });

    auto* theta = app.add_subcommand(
        "theta", "adjacency-to-value bijection table (sigma,theta_of_sigma,adj,val)");
    std::string theta_x, theta_y;
    int theta_n = 0;
    theta->add_option("--n", theta_n, "length")->required();
    theta->add_option("--x", theta_x, "set spec X")->required();
    theta->add_option("--y", theta_y, "set spec Y (disjoint from X)")->required();
    theta->callback([&] { exit_code = run_theta(flags, theta_n, theta_x, theta_y); });

    auto* gamma_demo = app.add_subcommand(
        "gamma-demo", "insertions that raise gamma by 2 (sigma,locus,before,after)");
    std::string gd_x, gd_y;
    int gd_n = 0;
    gamma_demo->add_option("--n", gd_n, "length")->required();
    gamma_demo->add_option("--x", gd_x, "set spec X")->required();
    gamma_demo->add_option("--y", gd_y, "set spec Y")->required();
    gamma_demo->callback([&] { exit_code = run_gamma_demo(flags, gd_n, gd_x, gd_y); });

    auto* conjectures = app.add_subcommand(
        "conjectures", "joint-equidistribution conjecture report (JSON)");
    int conj_max_n = 8;
    conjectures->add_option("--max-n", conj_max_n, "largest length to test");
    conjectures->callback([&] { exit_code = run_conjectures(flags, conj_max_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version are successes, not usage errors
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const permstat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const NoConstruction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const NoClosedForm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return exit_code;
}
