#include <doctest.h>

#include <algorithm>
#include <functional>
#include <tuple>
#include <random>
#include <stdexcept>

#include "friend10/arith.hpp"
#include "friend10/bounds.hpp"
#include "friend10/constraints.hpp"
#include "friend10/primes.hpp"
#include "friend10/search.hpp"
#include "oracles.hpp"

using namespace friend10;

TEST_CASE("divisor_sum_block matches brute force from 1") {
    const auto sums = divisor_sum_block(1, 5000);
    for (std::uint64_t m = 1; m <= 5000; ++m) REQUIRE(sums[m - 1] == oracle::sigma(m));
    CHECK(sums[0] == 1);
    CHECK(sums[9] == 18);
}

TEST_CASE("divisor_sum_block matches brute force on interior blocks") {
    for (const std::uint64_t start : {999'000ull, 123'456ull, 2ull}) {
        const std::uint64_t len = 2000;
        const auto sums = divisor_sum_block(start, len);
        for (std::uint64_t i = 0; i < len; i += 97)
            REQUIRE(sums[i] == oracle::sigma(start + i));
    }
    CHECK_THROWS_AS(divisor_sum_block(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(divisor_sum_block(5, 0), std::invalid_argument);
}

TEST_CASE("the block sieve agrees with the multiplicative sigma") {
    std::mt19937_64 rng(20'240'902);
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t m = rng() % 1'000'000 + 1;
        const auto sums = divisor_sum_block(m, 1);
        REQUIRE(BigInt(sums[0]) == sigma(factorize(BigInt(m))));
    }
}

TEST_CASE("a tiny scan covers everything except 10") {
    SearchConfig cfg;
    cfg.limit = 100;
    const SearchOutcome outcome = scan_for_friend(cfg);
    CHECK(outcome.scanned == 99);
    CHECK(outcome.matches.empty());
    CHECK(outcome.note.empty());
}

TEST_CASE("no integer below 1e6 shares the index of 10") {
    SearchConfig cfg;
    cfg.limit = 1'000'000;
    cfg.workers = 2;
    const SearchOutcome unconditional = scan_for_friend(cfg);
    CHECK(unconditional.scanned == 999'999);
    CHECK(unconditional.matches.empty());

    cfg.mode = ScanMode::assume_paper;
    const SearchOutcome filtered = scan_for_friend(cfg);
    CHECK(filtered.scanned == 200'000);  // every multiple of 5; 10 is tested, never a match
    CHECK(filtered.matches.empty());
    CHECK(filtered.matches == unconditional.matches);
    CHECK(!filtered.note.empty());
}

TEST_CASE("scan outcomes do not depend on the partitioning") {
    SearchConfig base;
    base.limit = 300'000;
    const SearchOutcome reference = scan_for_friend(base);

    for (const auto& [workers, chunk] : {std::pair<unsigned, std::uint64_t>{4, 1000},
                                         {2, 7777},
                                         {3, 299'999},
                                         {1, 300'001}}) {
        SearchConfig cfg = base;
        cfg.workers = workers;
        cfg.chunk = chunk;
        const SearchOutcome outcome = scan_for_friend(cfg);
        CHECK(outcome.scanned == reference.scanned);
        CHECK(outcome.matches == reference.matches);
    }

    // one integer per block still produces the same answer
    SearchConfig tiny;
    tiny.limit = 50'000;
    const SearchOutcome whole = scan_for_friend(tiny);
    tiny.chunk = 1;
    tiny.workers = 3;
    const SearchOutcome shredded = scan_for_friend(tiny);
    CHECK(whole.scanned == shredded.scanned);
    CHECK(whole.matches == shredded.matches);
}

TEST_CASE("scan validates its configuration") {
    SearchConfig cfg;
    cfg.limit = 5;
    CHECK_THROWS_AS(scan_for_friend(cfg), std::invalid_argument);
    cfg = {};
    cfg.chunk = 0;
    CHECK_THROWS_AS(scan_for_friend(cfg), std::invalid_argument);
    cfg = {};
    cfg.workers = 0;
    CHECK_THROWS_AS(scan_for_friend(cfg), std::invalid_argument);
    cfg = {};
    cfg.chunk = 1ull << 30;
    cfg.workers = 2;
    cfg.memory_budget = 1ull << 20;
    CHECK_THROWS_AS(scan_for_friend(cfg), std::invalid_argument);
}

namespace {

// Exhaustive enumeration with the same range cuts but none of the
// branch-and-bound machinery: classify every tuple one by one.
struct NaiveSignatureCount {
    PruningStats stats;
    std::vector<std::vector<std::uint64_t>> survivors;
};

NaiveSignatureCount enumerate_naively(unsigned omega, std::uint64_t ceiling) {
    const auto table = prime_table_with_limit(ceiling * 2 + 100);
    std::vector<std::uint64_t> pool;
    for (const auto p : table->primes()) {
        if (p >= 7 && p <= ceiling) pool.push_back(p);
    }
    const std::uint64_t cap2 = nth_prime(bound_index(2, omega));
    const std::uint64_t cap3 = nth_prime(bound_index(3, omega));
    const std::uint64_t cap4 = nth_prime(bound_index(4, omega));
    const ExactRational target(9, 5);

    NaiveSignatureCount out;
    std::vector<std::uint64_t> tuple{5};

    const auto classify = [&] {
        std::vector<BigInt> primes;
        for (const auto v : tuple) primes.emplace_back(v);
        ++out.stats.signatures_considered;
        if (!(abundancy_sup(primes) > target)) {
            ++out.stats.pruned_by_sup;
        } else if (abundancy_min_square(primes) > target) {
            ++out.stats.pruned_by_min_square;
        } else {
            ++out.stats.survivors;
            out.survivors.push_back(tuple);
        }
    };

    std::function<void(std::size_t)> extend = [&](std::size_t pool_start) {
        const std::size_t level = tuple.size();  // slots 1..omega-1 beyond the leading 5
        if (level == omega) {
            classify();
            return;
        }
        for (std::size_t i = pool_start; i < pool.size(); ++i) {
            if (pool.size() - i < omega - level) break;  // not enough primes left
            const std::uint64_t v = pool[i];
            // pool is sorted, so a cap miss ends the whole level
            if (level == 1 && v >= cap2) break;
            if (level == 2 && v >= cap3) break;
            if (level == 3 && v >= cap4) break;
            tuple.push_back(v);
            extend(i + 1);
            tuple.pop_back();
        }
    };
    extend(0);
    return out;
}

}  // namespace

TEST_CASE("signature enumeration matches the exhaustive oracle") {
    for (const auto& [omega, ceiling, max_report] :
         {std::tuple<unsigned, std::uint64_t, std::uint64_t>{7, 113, 40},
          {8, 97, 1'000'000},
          {7, 19, 5},    // pool too small for any tuple
          {7, 23, 5},    // exactly one tuple fits
          {7, 37, 50},
          {7, 149, 25}}) {
        SignatureConfig cfg;
        cfg.omega = omega;
        cfg.prime_ceiling = ceiling;
        cfg.max_report = max_report;
        const SearchOutcome fast = enumerate_signatures(cfg);
        const NaiveSignatureCount slow = enumerate_naively(omega, ceiling);

        CHECK(fast.pruning.signatures_considered == slow.stats.signatures_considered);
        CHECK(fast.pruning.pruned_by_sup == slow.stats.pruned_by_sup);
        CHECK(fast.pruning.pruned_by_min_square == slow.stats.pruned_by_min_square);
        CHECK(fast.pruning.survivors == slow.stats.survivors);
        CHECK(fast.pruning.signatures_considered ==
              fast.pruning.pruned_by_sup + fast.pruning.pruned_by_min_square +
                  fast.pruning.survivors);

        REQUIRE(fast.survivor_samples.size() ==
                std::min<std::size_t>(max_report, slow.survivors.size()));
        for (std::size_t i = 0; i < fast.survivor_samples.size(); ++i)
            REQUIRE(fast.survivor_samples[i] == slow.survivors[i]);
    }
}

TEST_CASE("survivors respect the q2 cap") {
    SignatureConfig cfg;
    cfg.omega = 7;
    cfg.prime_ceiling = 541;  // p_100
    cfg.max_report = 1'000'000;
    const SearchOutcome outcome = enumerate_signatures(cfg);
    CHECK(outcome.pruning.survivors > 0);
    REQUIRE(outcome.survivor_samples.size() == outcome.pruning.survivors);
    for (const auto& tuple : outcome.survivor_samples) {
        REQUIRE(tuple.size() == 7);
        REQUIRE(tuple[0] == 5);
        REQUIRE(tuple[1] >= 7);
        REQUIRE(tuple[1] <= 53);  // q2 < p_17 = 59
        REQUIRE(std::is_sorted(tuple.begin(), tuple.end()));
    }
}

TEST_CASE("the two cuts decide the packed seven-prime tuple") {
    // (5,7,11,13,17,19,23): the sup clears 9/5 but the min-square does not,
    // so it is never a survivor.
    const std::vector<BigInt> primes{5, 7, 11, 13, 17, 19, 23};
    const ExactRational target(9, 5);
    CHECK(abundancy_sup(primes) > target);
    CHECK(abundancy_min_square(primes) > target);

    SignatureConfig cfg;
    cfg.omega = 7;
    cfg.prime_ceiling = 541;
    cfg.max_report = 1'000'000;
    const SearchOutcome outcome = enumerate_signatures(cfg);
    const std::vector<std::uint64_t> tuple{5, 7, 11, 13, 17, 19, 23};
    for (const auto& sample : outcome.survivor_samples) REQUIRE(sample != tuple);
}

TEST_CASE("range-cut exclusions line up with the condition checks") {
    // q2 = 59 = p_17 is never enumerated at omega 7; the same shape fails
    // the q2 range condition.
    const Factorization f({{5, 2}, {59, 2}, {61, 2}, {67, 2}, {71, 2}, {73, 2}, {79, 2}});
    const ConditionReport report = check_friend_conditions(f);
    for (const auto& check : report.checks) {
        if (check.name == "q2-range") CHECK(!check.passed);
    }
}

TEST_CASE("signature enumeration validates its configuration") {
    SignatureConfig cfg;
    cfg.omega = 6;
    cfg.prime_ceiling = 541;
    CHECK_THROWS_AS(enumerate_signatures(cfg), std::invalid_argument);
    cfg.omega = 7;
    cfg.prime_ceiling = std::nullopt;
    CHECK_THROWS_AS(enumerate_signatures(cfg), std::invalid_argument);
    cfg.prime_ceiling = 541;
    cfg.max_report = 0;
    CHECK_THROWS_AS(enumerate_signatures(cfg), std::invalid_argument);
}
