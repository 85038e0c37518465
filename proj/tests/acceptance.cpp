// Acceptance suite: every release-gating claim of the toolkit, one line of
// output per criterion. Each check is exact (rationals or integers) except
// where a bound is itself a double-precision display form.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "friend10/arith.hpp"
#include "friend10/bounds.hpp"
#include "friend10/constraints.hpp"
#include "friend10/primes.hpp"
#include "friend10/search.hpp"
#include "friend10/verify.hpp"
#include "oracles.hpp"

using namespace friend10;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& run) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("[%s] %d. %s%s%s (%.2f s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : ": ", detail.c_str(), dt.count());
    if (!ok) ++g_failures;
}

std::string render(const SearchOutcome& outcome) {
    std::string s = "scanned=" + std::to_string(outcome.scanned) + ";matches=";
    for (const auto m : outcome.matches) s += std::to_string(m) + ",";
    return s;
}

bool constants_regression(std::string& detail) {
    bool ok = true;
    const ExactRational target(9, 5);
    const ExactRational expected[] = {{25, 14}, {1547, 864}, {33649, 18720}};
    for (int k = 2; k <= 4; ++k) {
        const BoundSpec& s = bound_spec(k);
        ok = ok && s.prefix * s.ratio_limit == expected[k - 2];
        ok = ok && s.composite_limit == expected[k - 2];
        ok = ok && s.composite_limit < target;
    }
    detail = "25/14, 1547/864, 33649/18720 all < 9/5 exactly";
    return ok;
}

bool theorem_pointwise(std::string& detail) {
    const VerifyReport report = run_theorem_suite(100'000);
    detail = std::to_string(report.checks) + " checks, " + std::to_string(report.violations) +
             " violations";
    if (report.first_violation) detail += "; first: " + *report.first_violation;
    return report.violations == 0 && report.checks == 300'000;
}

bool rosser_pointwise(std::string& detail) {
    const VerifyReport report = run_rosser_suite(100'000);
    detail = std::to_string(report.checks) + " checks, " + std::to_string(report.violations) +
             " violations";
    return report.violations == 0 && report.checks == 199'997;
}

bool bound_table_at_seven(std::string& detail) {
    bool ok = true;
    const std::uint64_t want_index[] = {17, 31, 59};
    const std::uint64_t want_prime[] = {59, 127, 277};
    const std::uint64_t want_cap[] = {53, 113, 271};
    for (int k = 2; k <= 4; ++k) {
        const BoundRow row = bound_row(k, 7);
        ok = ok && row.index == want_index[k - 2];
        ok = ok && row.prime_bound == want_prime[k - 2];
        // independent slow oracle for the prime ranks
        ok = ok && oracle::nth_prime(row.index) == want_prime[k - 2];
        // q_k < p_index caps q_k at the previous prime
        ok = ok && nth_prime(row.index - 1) == want_cap[k - 2];
        ok = ok && oracle::nth_prime(row.index - 1) == want_cap[k - 2];
    }
    detail = "indices (17,31,59), bounds (59,127,277), caps (53,113,271)";
    return ok;
}

bool property_suite(std::string& detail) {
    const VerifyReport report = run_property_suite(20'240'901);
    detail = std::to_string(report.checks) + " checks, " + std::to_string(report.violations) +
             " violations";
    if (report.first_violation) detail += "; first: " + *report.first_violation;
    return report.violations == 0 && report.checks == 22'000;
}

bool desk_scale_scan(std::string& detail) {
    SearchConfig serial;
    serial.limit = 10'000'000;
    serial.workers = 1;
    const SearchOutcome a = scan_for_friend(serial);

    SearchConfig parallel = serial;
    parallel.workers = 4;
    parallel.chunk = 1 << 17;
    const SearchOutcome b = scan_for_friend(parallel);

    bool ok = a.matches.empty() && render(a) == render(b);

    // Naive per-number cross-check on [1, 1e6]: recompute sigma by divisor
    // pairs, compare the match set, and spot-check the sieve's values.
    const std::uint64_t oracle_limit = 1'000'000;
    std::vector<std::uint64_t> oracle_matches;
    const auto sieve = divisor_sum_block(1, oracle_limit);
    for (std::uint64_t m = 1; m <= oracle_limit; ++m) {
        const std::uint64_t s = oracle::sigma(m);
        if (5 * s == 9 * m && m != 10) oracle_matches.push_back(m);
        if (m % 97 == 0) ok = ok && sieve[m - 1] == s;
    }
    std::vector<std::uint64_t> scan_below;
    for (const auto m : a.matches) {
        if (m <= oracle_limit) scan_below.push_back(m);
    }
    ok = ok && oracle_matches == scan_below && oracle_matches.empty();
    detail = "no index 9/5 in [1, 1e7] \\ {10}; serial == parallel; oracle agrees to 1e6";
    return ok;
}

bool constraint_coherence(std::string& detail) {
    std::mt19937_64 rng(20'240'903);
    const auto table = prime_table_with_count(300);
    const ExactRational target(9, 5);
    std::uint64_t bound_failures = 0;
    bool ok = true;

    for (int i = 0; i < 1000; ++i) {
        const unsigned omega = 7 + static_cast<unsigned>(rng() % 4);
        std::set<std::size_t> ranks;
        while (ranks.size() < omega - 1) ranks.insert(4 + rng() % 297);  // primes 7..p_300
        std::vector<FactorEntry> entries{{5, 2 * (1 + static_cast<unsigned long>(rng() % 3))}};
        for (const auto rank : ranks)
            entries.push_back(
                {BigInt(table->nth(rank)), 2 * (1 + static_cast<unsigned long>(rng() % 3))});
        const Factorization candidate(entries);
        const ConditionReport report = check_friend_conditions(candidate);
        for (const auto& check : report.checks) {
            int k = 0;
            if (check.name == "q2-range") k = 2;
            if (check.name == "q3-range") k = 3;
            if (check.name == "q4-range") k = 4;
            if (k == 0 || check.passed) continue;
            ++bound_failures;
            // pushing q_k to its threshold caps the index below 9/5, so the
            // candidate shape is impossible: replay that contradiction
            ok = ok && worst_case_tail_sup(k, candidate.omega()) < target;
        }
    }
    ok = ok && bound_failures >= 50;

    std::uint64_t order_checks = 0;
    const auto order_table = prime_table_with_limit(10'000);
    for (const auto r : order_table->primes()) {
        if (r > 10'000) break;
        if (r == 2 || r == 5) continue;
        const auto expected = oracle::least_odd_exponent(r);
        const auto actual = least_odd_exponent(BigInt(static_cast<unsigned long>(r)));
        ++order_checks;
        ok = ok && actual.has_value() == expected.has_value();
        if (expected && actual)
            ok = ok && *actual == BigInt(static_cast<unsigned long>(*expected));
    }
    detail = std::to_string(bound_failures) + " bound-failing candidates replayed; " +
             std::to_string(order_checks) + " odd-order equivalences";
    return ok;
}

}  // namespace

int main() {
    criterion(1, "bound constants regression", constants_regression);
    criterion(2, "ratio limits pointwise, omega in [1, 1e5], k in {2,3,4}", theorem_pointwise);
    criterion(3, "p_n < n(ln n + 2 ln ln n) on [4, 1e5] and p_n > n on [1, 1e5]",
              rosser_pointwise);
    criterion(4, "bound table at omega = 7", bound_table_at_seven);
    criterion(5, "abundancy property suite (exact, randomized)", property_suite);
    criterion(6, "scan to 1e7 finds no companion for 10", desk_scale_scan);
    criterion(7, "constraint coherence and odd-order equivalence", constraint_coherence);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
