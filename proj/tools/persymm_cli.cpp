// Command-line front end: rank-count tables, verification sweeps and
// bilinear solution counts, with CSV/JSON output in exact decimal.

#include "persymm/gamma.hpp"
#include "persymm/oracle.hpp"
#include "persymm/recurrence.hpp"
#include "persymm/solutions.hpp"
#include "persymm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using OrderedJson = nlohmann::ordered_json;

int default_budget_bits() {
    if (const char* env = std::getenv("PERSYMM_BUDGET_BITS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0 && v <= 30) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid PERSYMM_BUDGET_BITS\n";
    }
    return 26;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("range must look like A..B");
    try {
        return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
    } catch (...) {
        throw CLI::ValidationError("range must look like A..B");
    }
}

persymm::RankDistribution distribution_for(const persymm::ShapeParams& p, const std::string& method,
                                           const persymm::OracleOptions& opts) {
    using namespace persymm;
    if (method == "oracle") return enumerate_rank_distribution(p, opts);
    RankDistribution d{p, {}};
    for (int i = 0; i <= p.rank_bound(); ++i) {
        if (method == "recurrence")
            d.counts.push_back(gamma_via_recurrence(p, i));
        else if (method == "reduction" && p.s >= 2 && i >= p.s + 1)
            d.counts.push_back(gamma_via_reduction(p, i));
        else
            d.counts.push_back(gamma(p, i));
    }
    return d;
}

int cmd_gamma(const persymm::ShapeParams& p, std::optional<int> only_rank, const std::string& method,
              const std::string& format, const persymm::OracleOptions& opts) {
    const persymm::RankDistribution d = distribution_for(p, method, opts);
    const bool moments_ok = persymm::moments_hold(d);
    if (format == "csv") {
        std::cout << "s,m,k,i,gamma,method\n";
        for (int i = 0; i <= p.rank_bound(); ++i) {
            if (only_rank && *only_rank != i) continue;
            std::cout << p.s << ',' << p.m << ',' << p.k << ',' << i << ','
                      << d.counts[static_cast<size_t>(i)] << ',' << method << '\n';
        }
        return kExitOk;
    }
    OrderedJson out;
    out["params"] = {{"s", p.s}, {"m", p.m}, {"k", p.k}};
    out["method"] = method;
    OrderedJson counts = OrderedJson::array();
    for (int i = 0; i <= p.rank_bound(); ++i) {
        if (only_rank && *only_rank != i) continue;
        counts.push_back(d.counts[static_cast<size_t>(i)].str());
    }
    out["counts"] = counts;
    out["checks"] = {{"moments", moments_ok ? "ok" : "failed"}};
    std::cout << out.dump(2) << '\n';
    return moments_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_count(int q, const persymm::ShapeParams& p, const std::string& method, int budget_bits,
              int workers) {
    const persymm::SolutionCountQuery query(q, p);
    const persymm::BigInt count = method == "bruteforce"
                                      ? persymm::count_solutions_bruteforce(query, budget_bits, workers)
                                      : persymm::count_solutions_formula(query);
    std::cout << count << '\n';
    return kExitOk;
}

const char* status_name(persymm::CheckStatus st) {
    switch (st) {
        case persymm::CheckStatus::Pass: return "PASS";
        case persymm::CheckStatus::Fail: return "FAIL";
        case persymm::CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

int cmd_verify(const persymm::SweepConfig& cfg, const std::string& format) {
    const auto results = persymm::run_verification(cfg);
    int failed = 0, passed = 0, skipped = 0;
    for (const auto& r : results) {
        if (r.status == persymm::CheckStatus::Fail) ++failed;
        else if (r.status == persymm::CheckStatus::Pass) ++passed;
        else ++skipped;
    }
    if (format == "csv") {
        std::cout << "check,status,detail\n";
        for (const auto& r : results)
            std::cout << r.name << ',' << status_name(r.status) << ",\"" << r.detail << "\"\n";
    } else if (format == "json") {
        OrderedJson out;
        OrderedJson checks = OrderedJson::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
        out["checks"] = checks;
        out["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& r : results)
            std::cout << '[' << status_name(r.status) << "] " << r.name << ": " << r.detail << '\n';
        std::cout << "summary: " << passed << " passed, " << failed << " failed, " << skipped
                  << " skipped\n";
    }
    return failed == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank statistics of stacked persymmetric matrices over GF(2)"};
    app.require_subcommand(1);

    int s = 2, m = 0, k = 1, i = -1, q = 1;
    int budget_bits = default_budget_bits();
    int workers = 0;
    std::string gamma_method = "closed-form", gamma_format = "csv";
    std::string count_method = "formula", verify_format = "plain";
    std::string s_range, m_range, k_range;

    auto* gamma_cmd = app.add_subcommand("gamma", "Rank distribution of one family");
    gamma_cmd->add_option("--s", s, "top block rows")->required();
    gamma_cmd->add_option("--m", m, "bottom block row excess")->required();
    gamma_cmd->add_option("--k", k, "column count")->required();
    gamma_cmd->add_option("--i", i, "restrict output to one rank index");
    gamma_cmd->add_option("--method", gamma_method, "closed-form | recurrence | reduction | oracle")
        ->check(CLI::IsMember({"closed-form", "recurrence", "reduction", "oracle"}));
    gamma_cmd->add_option("--format", gamma_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    gamma_cmd->add_option("--budget-bits", budget_bits, "enumeration cap (log2 pairs)")
        ->check(CLI::Range(0, 30));
    gamma_cmd->add_option("--workers", workers, "worker threads, 0 = auto");

    auto* count_cmd = app.add_subcommand("count", "Solution count of the paired bilinear system");
    count_cmd->add_option("--q", q, "number of summands")->required();
    count_cmd->add_option("--s", s, "top block rows")->required();
    count_cmd->add_option("--m", m, "bottom block row excess")->required();
    count_cmd->add_option("--k", k, "column count")->required();
    count_cmd->add_option("--method", count_method, "formula | bruteforce")
        ->check(CLI::IsMember({"formula", "bruteforce"}));
    count_cmd->add_option("--budget-bits", budget_bits, "brute-force cap (log2 tuples)")
        ->check(CLI::Range(0, 30));
    count_cmd->add_option("--workers", workers, "worker threads, 0 = auto");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite over a parameter sweep");
    verify_cmd->add_option("--s-range", s_range, "inclusive range A..B")->default_val("2..3");
    verify_cmd->add_option("--m-range", m_range, "inclusive range A..B")->default_val("0..2");
    verify_cmd->add_option("--k-range", k_range, "inclusive range A..B")->default_val("1..6");
    verify_cmd->add_option("--budget-bits", budget_bits, "enumeration cap (log2 pairs)")
        ->check(CLI::Range(0, 30));
    verify_cmd->add_option("--workers", workers, "worker threads, 0 = auto");
    verify_cmd->add_option("--format", verify_format, "plain | csv | json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        const persymm::OracleOptions opts{budget_bits, workers};
        if (gamma_cmd->parsed()) {
            const persymm::ShapeParams p(s, m, k);
            std::optional<int> only_rank;
            if (gamma_cmd->count("--i") > 0) only_rank = i;
            return cmd_gamma(p, only_rank, gamma_method, gamma_format, opts);
        }
        if (count_cmd->parsed()) {
            if (budget_bits == 26 && count_cmd->count("--budget-bits") == 0 &&
                std::getenv("PERSYMM_BUDGET_BITS") == nullptr)
                budget_bits = 24;  // brute-force default cap
            return cmd_count(q, persymm::ShapeParams(s, m, k), count_method, budget_bits, workers);
        }
        persymm::SweepConfig cfg;
        std::tie(cfg.s_lo, cfg.s_hi) = parse_range(s_range);
        std::tie(cfg.m_lo, cfg.m_hi) = parse_range(m_range);
        std::tie(cfg.k_lo, cfg.k_hi) = parse_range(k_range);
        cfg.budget_bits = budget_bits;
        cfg.workers = workers;
        return cmd_verify(cfg, verify_format);
    } catch (const persymm::BudgetExceeded& e) {
        std::cerr << "budget refused: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailure;
    }
}
