#include "friend10/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace friend10 {

PrimeTable::PrimeTable(std::uint64_t limit, std::uint64_t memory_budget_bytes) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    const std::uint64_t sieve_bytes = limit / 8 + 1;
    if (sieve_bytes > memory_budget_bytes)
        throw std::invalid_argument("PrimeTable: sieve to " + std::to_string(limit) + " needs " +
                                    std::to_string(sieve_bytes) + " bytes, over the budget of " +
                                    std::to_string(memory_budget_bytes));
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) primes_.push_back(i);
    }
}

std::uint64_t PrimeTable::nth(std::size_t n) const {
    if (n < 1 || n > primes_.size())
        throw std::out_of_range("PrimeTable::nth: rank " + std::to_string(n) +
                                " not in table (count " + std::to_string(primes_.size()) + ")");
    return primes_[n - 1];
}

std::optional<std::size_t> PrimeTable::rank(std::uint64_t p) const {
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

std::size_t PrimeTable::count_leq(std::uint64_t v) const {
    const auto it = std::upper_bound(primes_.begin(), primes_.end(), v);
    return static_cast<std::size_t>(it - primes_.begin());
}

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const PrimeTable> g_table;  // grows monotonically, never shrinks

// Callers hold the lock. Doubles the sieve limit until pred(table) holds.
template <typename Pred>
std::shared_ptr<const PrimeTable> grow_until(Pred pred) {
    std::shared_ptr<const PrimeTable> table = g_table;
    if (table && pred(*table)) return table;
    std::uint64_t limit = table ? table->limit() : 1024;
    for (;;) {
        limit *= 2;
        table = std::make_shared<const PrimeTable>(limit);
        if (pred(*table)) break;
    }
    g_table = table;
    return table;
}

}  // namespace

std::shared_ptr<const PrimeTable> prime_table_with_count(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return grow_until([n](const PrimeTable& t) { return t.count() >= n; });
}

std::shared_ptr<const PrimeTable> prime_table_with_limit(std::uint64_t limit) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return grow_until([limit](const PrimeTable& t) { return t.limit() >= limit; });
}

std::uint64_t nth_prime(std::size_t n) {
    if (n < 1) throw std::invalid_argument("nth_prime: rank must be >= 1");
    return prime_table_with_count(n)->nth(n);
}

double rosser_bound(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("rosser_bound: requires n >= 4");
    const double x = static_cast<double>(n);
    return x * (std::log(x) + 2.0 * std::log(std::log(x)));
}

}  // namespace friend10
