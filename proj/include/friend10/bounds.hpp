#pragma once

#include <cstdint>
#include <optional>

#include "friend10/arith.hpp"
#include "friend10/report.hpp"

namespace friend10 {

// Any friend of 10 is an odd square with smallest prime divisor 5, so its
// abundancy index must reach exactly 9/5. Forcing the k-th smallest prime
// divisor q_k above a threshold prime caps the index below 9/5, which is a
// contradiction; the thresholds have the shape p_ceil(c*omega) for the
// constants below. This module computes those thresholds for any omega and
// re-verifies every inequality in the derivation with exact arithmetic.
struct BoundSpec {
    int k;                          // which prime divisor: 2, 3, or 4
    long coeff_num;                 // c = coeff_num/coeff_den; threshold rank is ceil(c*omega)
    long coeff_den;
    long offset;                    // the "+ omega - offset" term in the telescoped ratio
    ExactRational coefficient;      // c, as a rational
    ExactRational prefix;           // product of q/(q-1) over the forced smaller divisors
    ExactRational ratio_limit;      // strict upper limit of the telescoped ratio
    ExactRational composite_limit;  // prefix * ratio_limit; strictly below 9/5
    long lower_bound;               // q_k >= this (7, 11, 13)
};

// The three hard-coded rows (k = 2, 3, 4). Their internal consistency is
// re-checked the first time any of them is used.
const BoundSpec& bound_spec(int k);

// ceil(c_k * omega), in integer arithmetic. This rank indexes the bounding
// prime: q_k < p_index.
std::uint64_t bound_index(int k, std::uint64_t omega);

struct BoundRow {
    std::uint64_t omega = 0;
    int k = 0;
    std::uint64_t index = 0;
    std::uint64_t prime_bound = 0;            // p_index, the exact bound
    std::optional<double> rosser_form;        // index(log index + 2 log log index);
                                              // absent when index < 4
};

// The exact and display forms of the q_k bound at a given omega. The
// prime_bound is always strictly below rosser_form when the latter exists.
BoundRow bound_row(int k, std::uint64_t omega);

// (ceil(c*omega) + omega - offset) / (ceil(c*omega) - 1): the exact value the
// telescoped product of rank ratios collapses to.
ExactRational proof_ratio(int k, std::uint64_t omega);

// The same quantity rewritten through exact fractional parts, branching on
// whether ceil(c*omega) lands on an integer multiple (3 | omega for k = 2,
// 41 | omega for k = 3, 47 | omega for k = 4).
ExactRational proof_ratio_closed_form(int k, std::uint64_t omega);

// For every omega in [1, omega_max], checks exactly that
//   (a) proof_ratio == proof_ratio_closed_form,
//   (b) proof_ratio < ratio_limit(k),
//   (c) prefix(k) * proof_ratio < 9/5.
// One check counted per omega; first violation is reported, never thrown.
VerifyReport verify_ratio_limits(int k, std::uint64_t omega_max);

// For a non-divisible omega, checks the sandwich that pins the closed form
// between integer envelopes, and that the quotient stays at or below the
// endpoint fraction (e.g. (10w-4)/(7w-2) for k = 2). Rejects divisible
// omega, where the envelope is vacuous.
VerifyReport verify_fractional_envelope(int k, std::uint64_t omega);

// t -> (a t - b)/(c t - d) on integer arguments t >= domain_start.
// Strictly increasing toward a/c when b c > a d, strictly decreasing toward
// a/c when b c < a d. domain_start must exceed d/c so the denominator stays
// positive.
struct MonotoneRationalMap {
    long a = 1;
    long b = 0;
    long c = 1;
    long d = 0;
    long domain_start = 1;

    void validate() const;  // throws std::invalid_argument
    bool increasing() const { return b * c > a * d; }
    ExactRational eval(long t) const;
    ExactRational limit() const { return {a, c}; }
};

// Exact strict monotonicity over t in [domain_start, t_max], plus the limit
// comparison: increasing maps stay strictly below a/c, decreasing maps
// strictly above.
VerifyReport verify_monotone_map(const MonotoneRationalMap& map, long t_max);

// The rational maps the bound derivation leans on, per k: the endpoint of
// the non-divisible envelope and the divisible-branch closed form. Both are
// increasing with limit ratio_limit(k).
MonotoneRationalMap envelope_endpoint_map(int k);
MonotoneRationalMap divisible_branch_map(int k);

// x/(x-1) on x >= 2, strictly decreasing: the per-prime factor of the
// abundancy supremum as a function of the prime.
MonotoneRationalMap sup_factor_map();

// abundancy_sup of (5,[7,][11,] p_index, p_index+1, ..., p_index+omega-k):
// the candidate with q_k pushed to the threshold and everything above it
// packed tight. Strictly below 9/5 for every omega >= k; this is the
// contradiction the bounds rest on, replayed with actual primes.
ExactRational worst_case_tail_sup(int k, std::uint64_t omega);

}  // namespace friend10
