#pragma once

#include <optional>
#include <string>
#include <vector>

#include "friend10/arith.hpp"

namespace friend10 {

// Least e >= 1 with base^e == 1 (mod modulus). modulus must be prime and
// must not divide base; computed by factoring modulus - 1 and descending
// through its divisors.
BigInt multiplicative_order(const BigInt& base, const BigInt& modulus);

// Least odd f > 1 with 5^f == 1 (mod r), or absent when none exists. Such an
// f exists exactly when the order of 5 mod r is odd and > 1, and then equals
// that order. Rejects r = 2 and r = 5.
std::optional<BigInt> least_odd_exponent(const BigInt& r);

// The divisibility constraint a 5-adic valuation places on one prime divisor
// r of a candidate: with 5^(2a) exactly dividing the candidate, some r must
// satisfy f | 2a + 1 for its least odd exponent f.
struct OrderCondition {
    BigInt r;
    BigInt order_of_5;
    std::optional<BigInt> f;  // least odd exponent > 1, when it exists
    unsigned long a = 0;

    bool satisfied() const { return f && (2 * BigInt(a) + 1) % *f == 0; }
};

OrderCondition order_condition_for(const BigInt& r, unsigned long a);

struct ConditionCheck {
    std::string name;
    bool passed = false;
    std::optional<std::string> witness;
};

// Every published necessary condition for "candidate is a friend of 10",
// evaluated in a fixed order with no short-circuiting, so a report always
// shows the complete picture. overall is the conjunction.
struct ConditionReport {
    Factorization candidate;
    std::vector<ConditionCheck> checks;
    bool overall = false;
};

// The candidate must have value > 1. The checks, in order:
//   odd, not-10, perfect-square, smallest-prime-5, omega-at-least-7,
//   prime-divisor-1-mod-3, prime-divisor-1-mod-6, prime-divisor-1-mod-10,
//   order-condition, q2-range, q3-range, q4-range, abundancy-feasible,
//   abundancy-is-9/5.
ConditionReport check_friend_conditions(const Factorization& candidate);

}  // namespace friend10
