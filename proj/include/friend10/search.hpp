#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace friend10 {

enum class ScanMode {
    unconditional,  // test every integer in range (10 itself is skipped)
    assume_paper,   // test only multiples of 5; lossless, see SearchOutcome::note
};

struct SearchConfig {
    std::uint64_t limit = 10'000'000;  // scan [1, limit]
    ScanMode mode = ScanMode::unconditional;
    std::uint64_t chunk = 1 << 20;  // integers per work unit
    unsigned workers = 1;
    std::uint64_t memory_budget = 1ull << 30;  // bytes across all block buffers
};

struct PruningStats {
    std::uint64_t signatures_considered = 0;
    std::uint64_t pruned_by_sup = 0;
    std::uint64_t pruned_by_min_square = 0;
    std::uint64_t survivors = 0;
};

struct SearchOutcome {
    std::uint64_t scanned = 0;                // integers actually tested
    std::vector<std::uint64_t> matches;       // integers != 10 with index exactly 9/5
    std::chrono::duration<double> elapsed{0};
    PruningStats pruning;                     // populated by enumerate_signatures
    std::vector<std::vector<std::uint64_t>> survivor_samples;
    std::string note;
};

// Sum of divisors for every integer in [start, start + count), by
// accumulating divisor pairs (f, m/f) for f <= sqrt(m). No per-number
// factorization; O(count log sqrt(limit)) additions per block.
std::vector<std::uint64_t> divisor_sum_block(std::uint64_t start, std::uint64_t count);

// Scans [1, limit] for integers m with 5 sigma(m) == 9 m, i.e. abundancy
// exactly 9/5. Work is split into fixed chunks handed to workers; results
// merge in chunk order, so the outcome is identical for any worker count
// or chunk size.
SearchOutcome scan_for_friend(const SearchConfig& cfg);

struct SignatureConfig {
    unsigned omega = 7;
    // Largest prime value admitted in positions 5..omega, which the q2/q3/q4
    // bounds leave open. Required.
    std::optional<std::uint64_t> prime_ceiling;
    std::uint64_t max_report = 16;
};

// Enumerates strictly increasing prime tuples (5, q2, ..., q_omega) with
// each q_k below its bound prime for k = 2, 3, 4 and the rest capped by
// prime_ceiling, then applies two exact cuts:
//   sup cut:        product of p/(p-1) <= 9/5 means the index can never
//                   reach 9/5, whatever the exponents;
//   min-square cut: the index at all-exponents-2 already above 9/5 can only
//                   grow with larger exponents.
// Tuples surviving both cuts are reported up to max_report; counts cover
// the full space.
SearchOutcome enumerate_signatures(const SignatureConfig& cfg);

}  // namespace friend10
