#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace friend10 {

// All the primes up to a limit, with 1-based rank lookup (p_1 = 2).
// Immutable after construction; safe to share across threads.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit,
                        std::uint64_t memory_budget_bytes = kDefaultMemoryBudget);

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

    // 1-based: nth(1) == 2. Throws if n exceeds count().
    std::uint64_t nth(std::size_t n) const;

    // 1-based rank of p if p is a prime <= limit().
    std::optional<std::size_t> rank(std::uint64_t p) const;
    bool contains(std::uint64_t p) const { return rank(p).has_value(); }

    // Number of primes <= v (v <= limit()).
    std::size_t count_leq(std::uint64_t v) const;

    static constexpr std::uint64_t kDefaultMemoryBudget = 1ull << 30;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

// Shared, on demand growing view of the primes. The table doubles its sieve
// limit until the request is covered; concurrent callers see consistent
// snapshots. nth_prime(1) == 2.
std::shared_ptr<const PrimeTable> prime_table_with_count(std::size_t n);
std::shared_ptr<const PrimeTable> prime_table_with_limit(std::uint64_t limit);
std::uint64_t nth_prime(std::size_t n);

// n(log n + 2 log log n), natural logs: an upper bound for p_n valid for
// n >= 4. Display/diagnostic value; exact verdicts elsewhere compare prime
// ranks instead. Rejects n < 4, where the bound is not asserted.
double rosser_bound(std::uint64_t n);

}  // namespace friend10
