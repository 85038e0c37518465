#include "friend10/verify.hpp"

#include <random>
#include <string>

#include "friend10/arith.hpp"
#include "friend10/bounds.hpp"
#include "friend10/primes.hpp"

namespace friend10 {

VerifyReport run_theorem_suite(std::uint64_t omega_max) {
    VerifyReport report;
    for (int k = 2; k <= 4; ++k) report.merge(verify_ratio_limits(k, omega_max));
    return report;
}

VerifyReport run_rosser_suite(std::uint64_t n_max) {
    VerifyReport report;
    const auto table = prime_table_with_count(n_max);
    for (std::uint64_t n = 4; n <= n_max; ++n) {
        ++report.checks;
        if (!(static_cast<double>(table->nth(n)) < rosser_bound(n)))
            report.record_failure("p_" + std::to_string(n) + " not below its log bound");
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        ++report.checks;
        if (!(table->nth(n) > n))
            report.record_failure("p_" + std::to_string(n) + " not above " + std::to_string(n));
    }
    return report;
}

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

void check_multiplicativity(std::mt19937_64& rng, VerifyReport& report, std::uint64_t rounds) {
    for (std::uint64_t i = 0; i < rounds; ++i) {
        BigInt m, n;
        do {
            m = uniform(rng, 1, 1'000'000);
            n = uniform(rng, 1, 1'000'000);
        } while (gcd(m, n) != 1);
        ++report.checks;
        const ExactRational left = abundancy(factorize(m * n));
        const ExactRational right = abundancy(factorize(m)) * abundancy(factorize(n));
        if (left != right)
            report.record_failure("I(" + m.get_str() + "*" + n.get_str() +
                                  ") != I(m)I(n): " + left.str() + " vs " + right.str());
    }
}

void check_strict_growth(std::mt19937_64& rng, VerifyReport& report, std::uint64_t rounds) {
    for (std::uint64_t i = 0; i < rounds; ++i) {
        const BigInt n(uniform(rng, 1, 1'000'000));
        const BigInt a(uniform(rng, 2, 50));
        ++report.checks;
        if (!(abundancy(factorize(a * n)) > abundancy(factorize(n))))
            report.record_failure("I(" + a.get_str() + "*" + n.get_str() + ") not above I(n)");
    }
}

void check_domination(std::mt19937_64& rng, VerifyReport& report, std::uint64_t rounds) {
    const auto table = prime_table_with_count(64);
    for (std::uint64_t i = 0; i < rounds; ++i) {
        const std::size_t len = uniform(rng, 1, 6);
        // Strictly increasing ranks for the larger primes, then a dominated
        // choice rank_p[i] <= rank_q[i], also strictly increasing.
        std::vector<std::size_t> rank_q(len), rank_p(len);
        std::size_t prev = 0;
        for (std::size_t j = 0; j < len; ++j) {
            // leave room for the remaining picks
            rank_q[j] = uniform(rng, prev + 1, 64 - (len - 1 - j));
            prev = rank_q[j];
        }
        prev = 0;
        for (std::size_t j = 0; j < len; ++j) {
            // prev <= rank_q[j-1] < rank_q[j], so the range is never empty
            rank_p[j] = uniform(rng, prev + 1, rank_q[j]);
            prev = rank_p[j];
        }
        std::vector<FactorEntry> smaller, larger;
        for (std::size_t j = 0; j < len; ++j) {
            const auto exponent = static_cast<unsigned long>(uniform(rng, 1, 4));
            smaller.push_back({BigInt(table->nth(rank_p[j])), exponent});
            larger.push_back({BigInt(table->nth(rank_q[j])), exponent});
        }
        ++report.checks;
        const ExactRational small_index = abundancy(Factorization(smaller));
        const ExactRational large_index = abundancy(Factorization(larger));
        if (!(small_index >= large_index))
            report.record_failure("domination failed: " + small_index.str() + " < " +
                                  large_index.str());
    }
}

void check_sup_bound(std::mt19937_64& rng, VerifyReport& report, std::uint64_t rounds) {
    const auto table = prime_table_with_count(64);
    for (std::uint64_t i = 0; i < rounds; ++i) {
        const std::size_t len = uniform(rng, 1, 6);
        std::vector<FactorEntry> entries;
        std::size_t prev = 0;
        for (std::size_t j = 0; j < len; ++j) {
            const std::size_t rank = uniform(rng, prev + 1, 58 + j);
            entries.push_back(
                {BigInt(table->nth(rank)), static_cast<unsigned long>(uniform(rng, 1, 5))});
            prev = rank;
        }
        const Factorization f(entries);
        ++report.checks;
        if (!(abundancy(f) < abundancy_sup(f.primes())))
            report.record_failure("sup bound not strict for " + format_factorization(f));
    }
}

}  // namespace

VerifyReport run_property_suite(std::uint64_t seed, const PropertyCounts& counts) {
    std::mt19937_64 rng(seed);
    VerifyReport report;
    check_multiplicativity(rng, report, counts.multiplicativity);
    check_strict_growth(rng, report, counts.strict_growth);
    check_domination(rng, report, counts.domination);
    check_sup_bound(rng, report, counts.sup_bound);
    return report;
}

}  // namespace friend10
