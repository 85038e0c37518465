// friend10: command-line front end for the abundancy / friends-of-10 toolkit.
// Verdicts are exact; every output is deterministic for a fixed argv + seed.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "friend10/arith.hpp"
#include "friend10/bounds.hpp"
#include "friend10/constraints.hpp"
#include "friend10/primes.hpp"
#include "friend10/search.hpp"
#include "friend10/verify.hpp"

namespace {

using friend10::BigInt;
using friend10::ExactRational;
using friend10::Factorization;
using friend10::VerifyReport;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1729;

struct GlobalFlags {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
};

Factorization parse_candidate(const std::string& text) {
    const bool integral = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
    if (integral) return friend10::factorize(BigInt(text, 10));
    return friend10::parse_factorization(text);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int emit_verify(const GlobalFlags& flags, const std::string& suite, std::uint64_t suites,
                const VerifyReport& report) {
    if (flags.format == "json") {
        json out;
        out["suite"] = suite;
        out["suites"] = suites;
        out["checks"] = report.checks;
        out["violations"] = report.violations;
        out["first_violation"] =
            report.first_violation ? json(*report.first_violation) : json(nullptr);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << suites << " suites, " << report.checks << " checks, " << report.violations
                  << " violations\n";
        if (report.first_violation)
            std::cout << "first violation: " << *report.first_violation << "\n";
    }
    return report.ok() ? 0 : 1;
}

int run_abundancy(const GlobalFlags& flags, const std::string& value) {
    const Factorization f = parse_candidate(value);
    const ExactRational index = friend10::abundancy(f);
    if (flags.format == "json") {
        json out;
        out["input"] = value;
        out["factorization"] = friend10::format_factorization(f);
        out["abundancy"] = index.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << index.str() << "\n";
    }
    return 0;
}

int run_primes_nth(const GlobalFlags& flags, std::uint64_t n) {
    const std::uint64_t p = friend10::nth_prime(n);
    if (flags.format == "json") {
        json out;
        out["n"] = n;
        out["prime"] = p;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << p << "\n";
    }
    return 0;
}

int run_bounds(const GlobalFlags& flags, std::uint64_t omega_min, std::uint64_t omega_max,
               const std::vector<int>& ks) {
    std::vector<friend10::BoundRow> rows;
    for (std::uint64_t omega = omega_min; omega <= omega_max; ++omega)
        for (int k : ks) rows.push_back(friend10::bound_row(k, omega));

    if (flags.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json row;
            row["omega"] = r.omega;
            row["k"] = r.k;
            row["index"] = r.index;
            row["prime_bound"] = r.prime_bound;
            row["rosser_form"] = r.rosser_form ? json(*r.rosser_form) : json(nullptr);
            out.push_back(std::move(row));
        }
        std::cout << out.dump() << "\n";
    } else if (flags.format == "csv") {
        std::cout << "omega,k,index,prime_bound,rosser_form\n";
        for (const auto& r : rows)
            std::cout << r.omega << "," << r.k << "," << r.index << "," << r.prime_bound << ","
                      << (r.rosser_form ? format_double(*r.rosser_form) : "") << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << "omega=" << r.omega << " k=" << r.k << " index=" << r.index
                      << " prime_bound=" << r.prime_bound << " rosser_form="
                      << (r.rosser_form ? format_double(*r.rosser_form) : "-") << "\n";
    }
    return 0;
}

int run_check(const GlobalFlags& flags, const std::string& value) {
    const Factorization f = parse_candidate(value);
    const friend10::ConditionReport report = friend10::check_friend_conditions(f);
    if (flags.format == "json") {
        json out;
        out["candidate"] = friend10::format_factorization(report.candidate);
        out["checks"] = json::array();
        for (const auto& c : report.checks) {
            json check;
            check["name"] = c.name;
            check["passed"] = c.passed;
            check["witness"] = c.witness ? json(*c.witness) : json(nullptr);
            out["checks"].push_back(std::move(check));
        }
        out["overall"] = report.overall;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name;
            if (c.witness) std::cout << "  (" << *c.witness << ")";
            std::cout << "\n";
        }
        std::cout << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int run_scan(const GlobalFlags& flags, const friend10::SearchConfig& cfg, bool timings) {
    const friend10::SearchOutcome outcome = friend10::scan_for_friend(cfg);
    const char* mode = cfg.mode == friend10::ScanMode::unconditional ? "unconditional"
                                                                     : "assume-paper";
    if (flags.format == "json") {
        json out;
        out["limit"] = cfg.limit;
        out["mode"] = mode;
        out["workers"] = cfg.workers;
        out["chunk"] = cfg.chunk;
        out["scanned"] = outcome.scanned;
        out["matches"] = outcome.matches;
        out["note"] = outcome.note.empty() ? json(nullptr) : json(outcome.note);
        if (timings) out["elapsed_seconds"] = outcome.elapsed.count();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "scanned " << outcome.scanned << " integers in [1, " << cfg.limit
                  << "] (mode " << mode << ")\n";
        if (outcome.matches.empty()) {
            std::cout << "matches: none\n";
        } else {
            std::cout << "matches:";
            for (const auto m : outcome.matches) std::cout << " " << m;
            std::cout << "\n";
        }
        if (!outcome.note.empty()) std::cout << "note: " << outcome.note << "\n";
        if (timings) std::cout << "elapsed: " << outcome.elapsed.count() << " s\n";
    }
    return outcome.matches.empty() ? 0 : 1;
}

int run_signatures(const GlobalFlags& flags, const friend10::SignatureConfig& cfg, bool timings) {
    const friend10::SearchOutcome outcome = friend10::enumerate_signatures(cfg);
    const auto& stats = outcome.pruning;
    if (flags.format == "json") {
        json out;
        out["omega"] = cfg.omega;
        out["prime_ceiling"] = *cfg.prime_ceiling;
        out["signatures_considered"] = stats.signatures_considered;
        out["pruned_by_sup"] = stats.pruned_by_sup;
        out["pruned_by_min_square"] = stats.pruned_by_min_square;
        out["survivors"] = stats.survivors;
        out["survivor_samples"] = outcome.survivor_samples;
        if (timings) out["elapsed_seconds"] = outcome.elapsed.count();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "signatures_considered=" << stats.signatures_considered
                  << " pruned_by_sup=" << stats.pruned_by_sup
                  << " pruned_by_min_square=" << stats.pruned_by_min_square
                  << " survivors=" << stats.survivors << "\n";
        for (const auto& tuple : outcome.survivor_samples) {
            std::cout << "survivor:";
            for (const auto p : tuple) std::cout << " " << p;
            std::cout << "\n";
        }
        if (timings) std::cout << "elapsed: " << outcome.elapsed.count() << " s\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact-arithmetic toolkit for abundancy indices and friends of 10"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for randomized suites")->capture_default_str();

    std::string value;
    auto* abundancy_cmd =
        app.add_subcommand("abundancy", "abundancy index of an integer or factorization");
    abundancy_cmd->fallthrough();
    abundancy_cmd->add_option("value", value, "integer or factorization like 5^2*7^2")
        ->required();

    auto* primes_cmd = app.add_subcommand("primes", "prime utilities");
    primes_cmd->fallthrough();
    primes_cmd->require_subcommand(1);
    std::uint64_t nth_n = 1;
    auto* nth_cmd = primes_cmd->add_subcommand("nth", "n-th prime, 1-based (p_1 = 2)");
    nth_cmd->fallthrough();
    nth_cmd->add_option("n", nth_n, "rank")->required()->check(CLI::PositiveNumber);

    auto* bounds_cmd = app.add_subcommand("bounds", "q_k bound table rows");
    bounds_cmd->fallthrough();
    std::uint64_t omega_min = 7, omega_max = 7;
    std::vector<int> ks{2, 3, 4};
    bounds_cmd->add_option("--omega-min", omega_min, "first omega")->required();
    bounds_cmd->add_option("--omega-max", omega_max, "last omega")->required();
    bounds_cmd->add_option("--k", ks, "which divisors (2,3,4)")
        ->delimiter(',')
        ->check(CLI::Range(2, 4));

    auto* verify_cmd = app.add_subcommand("verify", "exact verification sweeps");
    verify_cmd->fallthrough();
    std::string suite;
    std::uint64_t verify_omega_max = 100'000;
    std::uint64_t verify_max = 100'000;
    verify_cmd->add_option("--suite", suite, "theorems | rosser | properties")
        ->required()
        ->check(CLI::IsMember({"theorems", "rosser", "properties"}));
    verify_cmd->add_option("--omega-max", verify_omega_max, "omega range for the theorems suite");
    verify_cmd->add_option("--max", verify_max, "rank range for the rosser suite");

    auto* check_cmd = app.add_subcommand("check", "necessary conditions for a friend of 10");
    check_cmd->fallthrough();
    check_cmd->add_option("value", value, "integer or factorization like 5^2*7^2")->required();

    auto* scan_cmd = app.add_subcommand("scan", "scan [1, limit] for an integer with index 9/5");
    scan_cmd->fallthrough();
    friend10::SearchConfig scan_cfg;
    scan_cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    std::string mode = "unconditional";
    bool timings = false;
    scan_cmd->add_option("--limit", scan_cfg.limit, "scan ceiling")->capture_default_str();
    scan_cmd->add_option("--mode", mode, "unconditional | assume-paper")
        ->check(CLI::IsMember({"unconditional", "assume-paper"}))
        ->capture_default_str();
    scan_cmd->add_option("--workers", scan_cfg.workers, "worker threads")->capture_default_str();
    scan_cmd->add_option("--chunk", scan_cfg.chunk, "integers per work unit")
        ->capture_default_str();
    scan_cmd->add_flag("--timings", timings, "include elapsed time in the output");

    auto* signatures_cmd =
        app.add_subcommand("signatures", "enumerate candidate prime tuples with exact cuts");
    signatures_cmd->fallthrough();
    friend10::SignatureConfig sig_cfg;
    unsigned sig_omega = 7;
    std::uint64_t sig_ceiling = 0;
    signatures_cmd->add_option("--omega", sig_omega, "number of distinct primes (>= 7)")
        ->required();
    signatures_cmd->add_option("--prime-ceiling", sig_ceiling, "largest admissible tail prime")
        ->required();
    signatures_cmd->add_option("--max-report", sig_cfg.max_report, "survivors to list")
        ->capture_default_str();
    signatures_cmd->add_flag("--timings", timings, "include elapsed time in the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (flags.format == "csv" && !bounds_cmd->parsed()) {
            std::cerr << "error: --format csv is only available for 'bounds'\n";
            return 2;
        }
        if (abundancy_cmd->parsed()) return run_abundancy(flags, value);
        if (primes_cmd->parsed()) return run_primes_nth(flags, nth_n);
        if (bounds_cmd->parsed()) {
            if (omega_min < 1 || omega_min > omega_max) {
                std::cerr << "error: need 1 <= --omega-min <= --omega-max\n";
                return 2;
            }
            std::sort(ks.begin(), ks.end());
            ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
            return run_bounds(flags, omega_min, omega_max, ks);
        }
        if (verify_cmd->parsed()) {
            if (suite == "theorems")
                return emit_verify(flags, suite, 3, friend10::run_theorem_suite(verify_omega_max));
            if (suite == "rosser")
                return emit_verify(flags, suite, 2, friend10::run_rosser_suite(verify_max));
            return emit_verify(flags, suite, 4, friend10::run_property_suite(flags.seed));
        }
        if (check_cmd->parsed()) return run_check(flags, value);
        if (scan_cmd->parsed()) {
            scan_cfg.mode = mode == "unconditional" ? friend10::ScanMode::unconditional
                                                    : friend10::ScanMode::assume_paper;
            return run_scan(flags, scan_cfg, timings);
        }
        if (signatures_cmd->parsed()) {
            sig_cfg.omega = sig_omega;
            sig_cfg.prime_ceiling = sig_ceiling;
            return run_signatures(flags, sig_cfg, timings);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}
