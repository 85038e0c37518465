#include "friend10/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "friend10/arith.hpp"
#include "friend10/bounds.hpp"
#include "friend10/primes.hpp"

namespace friend10 {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("search: counter exceeds 64 bits");
    return a + b;
}

}  // namespace

std::vector<std::uint64_t> divisor_sum_block(std::uint64_t start, std::uint64_t count) {
    if (start < 1) throw std::invalid_argument("divisor_sum_block: start must be >= 1");
    if (count < 1) throw std::invalid_argument("divisor_sum_block: count must be >= 1");
    const std::uint64_t past = start + count;
    std::vector<std::uint64_t> sums(count, 0);
    const std::uint64_t root = isqrt64(past - 1);
    for (std::uint64_t f = 1; f <= root; ++f) {
        // Walk multiples m = f*c with c >= f, so each divisor pair lands once.
        const std::uint64_t lowest = std::max(start, f * f);
        std::uint64_t m = (lowest + f - 1) / f * f;
        std::uint64_t c = m / f;
        for (; m < past; m += f, ++c) {
            sums[m - start] += (c == f) ? f : f + c;
        }
    }
    return sums;
}

namespace {

struct ChunkResult {
    std::uint64_t tested = 0;
    std::vector<std::uint64_t> matches;
};

ChunkResult scan_chunk(std::uint64_t lo, std::uint64_t hi, ScanMode mode) {
    const auto sums = divisor_sum_block(lo, hi - lo + 1);
    ChunkResult result;
    const auto test = [&](std::uint64_t m) {
        ++result.tested;
        if (5 * sums[m - lo] == 9 * m && m != 10) result.matches.push_back(m);
    };
    if (mode == ScanMode::unconditional) {
        for (std::uint64_t m = lo; m <= hi; ++m) {
            if (m == 10) continue;
            test(m);
        }
    } else {
        for (std::uint64_t m = (lo + 4) / 5 * 5; m <= hi; m += 5) test(m);
    }
    return result;
}

}  // namespace

SearchOutcome scan_for_friend(const SearchConfig& cfg) {
    if (cfg.limit < 10) throw std::invalid_argument("scan_for_friend: limit must be >= 10");
    if (cfg.chunk < 1) throw std::invalid_argument("scan_for_friend: chunk must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("scan_for_friend: workers must be >= 1");
    const std::uint64_t block_bytes = cfg.chunk * sizeof(std::uint64_t);
    if (block_bytes / sizeof(std::uint64_t) != cfg.chunk ||
        block_bytes > cfg.memory_budget / cfg.workers)
        throw std::invalid_argument(
            "scan_for_friend: block buffers of " + std::to_string(cfg.workers) + " x " +
            std::to_string(block_bytes) + " bytes exceed the memory budget of " +
            std::to_string(cfg.memory_budget));

    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t n_chunks = (cfg.limit + cfg.chunk - 1) / cfg.chunk;
    std::vector<ChunkResult> results(n_chunks);
    std::atomic<std::uint64_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= n_chunks) break;
            const std::uint64_t lo = 1 + i * cfg.chunk;
            const std::uint64_t hi = std::min(cfg.limit, lo + cfg.chunk - 1);
            results[i] = scan_chunk(lo, hi, cfg.mode);
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < cfg.workers; ++w) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    SearchOutcome outcome;
    for (const auto& r : results) {  // chunk order keeps output deterministic
        outcome.scanned = add_checked(outcome.scanned, r.tested);
        outcome.matches.insert(outcome.matches.end(), r.matches.begin(), r.matches.end());
    }
    outcome.elapsed = std::chrono::steady_clock::now() - t0;
    if (cfg.mode == ScanMode::assume_paper)
        outcome.note =
            "5 | m is unconditional: 5 sigma(m) = 9 m implies 5 | 9m, and gcd(5, 9) = 1, "
            "so 5 | m; restricting to multiples of 5 loses no matches";
    return outcome;
}

namespace {

// Branch-and-bound enumerator over prime ranks. Running sup/min-square
// products are exact rationals; whole subtrees settle in bulk when their
// extremal completions already decide both cuts, with tuple counts taken
// binomially instead of walked.
class SignatureEnumerator {
public:
    SignatureEnumerator(unsigned omega, std::uint64_t ceiling, std::uint64_t max_report)
        : omega_(omega), max_report_(max_report), target_(9, 5) {
        const std::uint64_t i2 = bound_index(2, omega);
        const std::uint64_t i3 = bound_index(3, omega);
        const std::uint64_t i4 = bound_index(4, omega);
        auto table = prime_table_with_count(i4);
        if (table->limit() < ceiling) table = prime_table_with_limit(ceiling);
        table_ = std::move(table);
        max_rank_ = table_->count_leq(ceiling);
        slot_cap_ = {0, 0, i2 - 1, i3 - 1, i4 - 1};
    }

    SearchOutcome run() {
        SearchOutcome outcome;
        const auto t0 = std::chrono::steady_clock::now();
        if (max_rank_ >= 3) {
            std::vector<std::uint64_t> prefix{5};
            descend(2, 3, ExactRational(5, 4), ExactRational(31, 25), prefix);
        }
        outcome.pruning = stats_;
        outcome.survivor_samples = std::move(samples_);
        outcome.elapsed = std::chrono::steady_clock::now() - t0;
        return outcome;
    }

private:
    std::uint64_t prime_at(std::size_t rank) const { return table_->primes()[rank - 1]; }

    ExactRational sup_term(std::size_t rank) const {
        const long p = static_cast<long>(prime_at(rank));
        return {p, p - 1};
    }

    ExactRational min_square_term(std::size_t rank) const {
        const BigInt p(prime_at(rank));
        return {p * p + p + 1, p * p};
    }

    ExactRational product_over(std::size_t lo, std::size_t hi,
                               ExactRational (SignatureEnumerator::*term)(std::size_t) const)
        const {
        ExactRational out(1);
        for (std::size_t r = lo; r <= hi; ++r) out *= (this->*term)(r);
        return out;
    }

    static std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
        if (k > n) return 0;
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        if (!b.fits_ulong_p()) throw std::overflow_error("signature count exceeds 64 bits");
        return b.get_ui();
    }

    void settle_leaf(const ExactRational& sup, const ExactRational& min_square,
                     const std::vector<std::uint64_t>& tuple) {
        stats_.signatures_considered = add_checked(stats_.signatures_considered, 1);
        if (!(sup > target_)) {
            stats_.pruned_by_sup = add_checked(stats_.pruned_by_sup, 1);
        } else if (min_square > target_) {
            stats_.pruned_by_min_square = add_checked(stats_.pruned_by_min_square, 1);
        } else {
            stats_.survivors = add_checked(stats_.survivors, 1);
            if (samples_.size() < max_report_) samples_.push_back(tuple);
        }
    }

    void settle_bulk(std::uint64_t count, std::uint64_t PruningStats::*bucket) {
        stats_.signatures_considered = add_checked(stats_.signatures_considered, count);
        stats_.*bucket = add_checked(stats_.*bucket, count);
    }

    // Lexicographically first completions of the prefix, for sampling a
    // subtree already known to survive wholesale.
    void materialize(unsigned level, std::size_t prev_rank, std::vector<std::uint64_t>& prefix) {
        if (samples_.size() >= max_report_) return;
        if (level > omega_) {
            samples_.push_back(prefix);
            return;
        }
        const std::size_t hi = max_rank_ - (omega_ - level);
        for (std::size_t r = prev_rank + 1; r <= hi && samples_.size() < max_report_; ++r) {
            prefix.push_back(prime_at(r));
            materialize(level + 1, r, prefix);
            prefix.pop_back();
        }
    }

    void descend(unsigned level, std::size_t prev_rank, const ExactRational& sup,
                 const ExactRational& min_square, std::vector<std::uint64_t>& prefix) {
        if (level > omega_) {
            settle_leaf(sup, min_square, prefix);
            return;
        }
        const std::size_t slots_after = omega_ - level;
        if (max_rank_ < slots_after || max_rank_ - slots_after < prev_rank + 1) return;
        std::size_t hi = max_rank_ - slots_after;
        if (level <= 4) hi = std::min(hi, slot_cap_[level]);
        const std::size_t lo = prev_rank + 1;
        if (lo > hi) return;

        if (level >= 5) {
            // Uniform tail: slots level..omega all draw from (prev_rank, max_rank].
            const std::size_t s = slots_after + 1;
            const std::uint64_t pool = max_rank_ - prev_rank;
            const ExactRational best_sup =
                sup * product_over(lo, lo + s - 1, &SignatureEnumerator::sup_term);
            if (!(best_sup > target_)) {
                settle_bulk(binomial_checked(pool, s), &PruningStats::pruned_by_sup);
                return;
            }
            const ExactRational worst_sup =
                sup * product_over(max_rank_ - s + 1, max_rank_, &SignatureEnumerator::sup_term);
            if (worst_sup > target_) {  // no completion fails the sup cut
                const ExactRational least_msq =
                    min_square * product_over(max_rank_ - s + 1, max_rank_,
                                              &SignatureEnumerator::min_square_term);
                if (least_msq > target_) {
                    settle_bulk(binomial_checked(pool, s), &PruningStats::pruned_by_min_square);
                    return;
                }
                const ExactRational greatest_msq =
                    min_square *
                    product_over(lo, lo + s - 1, &SignatureEnumerator::min_square_term);
                if (!(greatest_msq > target_)) {  // every completion survives both cuts
                    const std::uint64_t count = binomial_checked(pool, s);
                    stats_.signatures_considered =
                        add_checked(stats_.signatures_considered, count);
                    stats_.survivors = add_checked(stats_.survivors, count);
                    if (samples_.size() < max_report_) materialize(level, prev_rank, prefix);
                    return;
                }
            }
        }
        for (std::size_t r = lo; r <= hi; ++r) {
            prefix.push_back(prime_at(r));
            descend(level + 1, r, sup * sup_term(r), min_square * min_square_term(r), prefix);
            prefix.pop_back();
        }
    }

    unsigned omega_;
    std::uint64_t max_report_;
    ExactRational target_;
    std::shared_ptr<const PrimeTable> table_;
    std::size_t max_rank_ = 0;
    std::array<std::size_t, 5> slot_cap_{};
    PruningStats stats_;
    std::vector<std::vector<std::uint64_t>> samples_;
};

}  // namespace

SearchOutcome enumerate_signatures(const SignatureConfig& cfg) {
    if (cfg.omega < 7)
        throw std::invalid_argument("enumerate_signatures: omega must be >= 7");
    if (!cfg.prime_ceiling)
        throw std::invalid_argument(
            "enumerate_signatures: a prime ceiling is required for the unbounded tail");
    if (cfg.max_report < 1)
        throw std::invalid_argument("enumerate_signatures: max_report must be >= 1");
    SignatureEnumerator enumerator(cfg.omega, *cfg.prime_ceiling, cfg.max_report);
    return enumerator.run();
}

}  // namespace friend10
