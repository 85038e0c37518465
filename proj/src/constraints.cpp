#include "friend10/constraints.hpp"

#include <stdexcept>

#include "friend10/bounds.hpp"
#include "friend10/primes.hpp"

namespace friend10 {

BigInt multiplicative_order(const BigInt& base, const BigInt& modulus) {
    if (!is_prime(modulus))
        throw std::invalid_argument("multiplicative_order: modulus must be prime");
    if (mpz_divisible_p(base.get_mpz_t(), modulus.get_mpz_t()))
        throw std::invalid_argument("multiplicative_order: modulus divides base");
    BigInt order = modulus - 1;  // divides the group order for prime modulus
    const Factorization group_order = factorize(order);
    BigInt probe;
    for (const auto& entry : group_order.entries()) {
        for (unsigned long i = 0; i < entry.exponent; ++i) {
            const BigInt reduced = order / entry.prime;
            mpz_powm(probe.get_mpz_t(), base.get_mpz_t(), reduced.get_mpz_t(),
                     modulus.get_mpz_t());
            if (probe != 1) break;
            order = reduced;
        }
    }
    return order;
}

std::optional<BigInt> least_odd_exponent(const BigInt& r) {
    if (r == 2 || r == 5)
        throw std::invalid_argument("least_odd_exponent: r must be a prime other than 2 and 5");
    if (!is_prime(r)) throw std::invalid_argument("least_odd_exponent: r must be prime");
    const BigInt order = multiplicative_order(5, r);
    // 5^f == 1 (mod r) iff order | f; an odd f exists iff the order itself is
    // odd, and the smallest odd multiple > 1 is then the order.
    if (order > 1 && mpz_odd_p(order.get_mpz_t())) return order;
    return std::nullopt;
}

OrderCondition order_condition_for(const BigInt& r, unsigned long a) {
    OrderCondition cond;
    cond.r = r;
    cond.order_of_5 = multiplicative_order(5, r);
    cond.f = least_odd_exponent(r);
    cond.a = a;
    return cond;
}

namespace {

void append(ConditionReport& report, std::string name, bool passed,
            std::optional<std::string> witness = std::nullopt) {
    report.checks.push_back({std::move(name), passed, std::move(witness)});
}

// Existence of a prime divisor congruent to `residue` mod `modulus`.
void append_residue_check(ConditionReport& report, const Factorization& f, std::string name,
                          unsigned long modulus, unsigned long residue) {
    for (const auto& e : f.entries()) {
        if (mpz_fdiv_ui(e.prime.get_mpz_t(), modulus) == residue) {
            append(report, std::move(name), true, "witness " + e.prime.get_str());
            return;
        }
    }
    append(report, std::move(name), false,
           "no prime divisor is " + std::to_string(residue) + " mod " + std::to_string(modulus));
}

void append_order_check(ConditionReport& report, const Factorization& f) {
    const auto exp5 = f.exponent_of(5);
    if (!exp5) {
        append(report, "order-condition", false, "5 does not divide the candidate");
        return;
    }
    if (*exp5 % 2 != 0) {
        append(report, "order-condition", false, "exponent of 5 is odd");
        return;
    }
    const unsigned long a = *exp5 / 2;
    for (const auto& e : f.entries()) {
        if (e.prime == 2 || e.prime == 5) continue;  // no odd exponent of 5 exists mod 2
        const OrderCondition cond = order_condition_for(e.prime, a);
        if (cond.satisfied()) {
            append(report, "order-condition", true,
                   "r=" + e.prime.get_str() + ", f=" + cond.f->get_str() + " divides 2a+1=" +
                       std::to_string(2 * a + 1));
            return;
        }
    }
    append(report, "order-condition", false,
           "no prime divisor r has an odd f > 1 with 5^f = 1 mod r dividing 2a+1=" +
               std::to_string(2 * a + 1));
}

void append_qk_check(ConditionReport& report, const Factorization& f, int k) {
    const std::string name = "q" + std::to_string(k) + "-range";
    if (f.omega() < static_cast<std::size_t>(k)) {
        append(report, name, false, "fewer than " + std::to_string(k) + " prime divisors");
        return;
    }
    const BoundSpec& spec = bound_spec(k);
    const BigInt& q = f.entries()[static_cast<std::size_t>(k - 1)].prime;
    const std::uint64_t index = bound_index(k, f.omega());
    const BigInt bound(nth_prime(index));
    const bool passed = q >= spec.lower_bound && q < bound;
    append(report, name, passed,
           "q" + std::to_string(k) + "=" + q.get_str() + ", allowed [" +
               std::to_string(spec.lower_bound) + ", " + bound.get_str() + ")");
}

}  // namespace

ConditionReport check_friend_conditions(const Factorization& candidate) {
    if (candidate.value() <= 1)
        throw std::invalid_argument("check_friend_conditions: candidate must exceed 1");
    const ExactRational target(9, 5);
    ConditionReport report;
    report.candidate = candidate;
    const BigInt n = candidate.value();

    const bool odd = candidate.exponent_of(2) == std::nullopt;
    append(report, "odd", odd, odd ? std::nullopt : std::optional<std::string>("divisible by 2"));

    append(report, "not-10", n != 10,
           n != 10 ? std::nullopt : std::optional<std::string>("the candidate is 10 itself"));

    bool square = true;
    for (const auto& e : candidate.entries()) {
        if (e.exponent % 2 != 0) {
            append(report, "perfect-square", false,
                   "exponent of " + e.prime.get_str() + " is odd");
            square = false;
            break;
        }
    }
    if (square) append(report, "perfect-square", true);

    const bool least5 = !candidate.entries().empty() && candidate.entries().front().prime == 5;
    append(report, "smallest-prime-5", least5,
           least5 ? std::nullopt
                  : std::optional<std::string>("smallest prime is " +
                                               candidate.entries().front().prime.get_str()));

    append(report, "omega-at-least-7", candidate.omega() >= 7,
           "omega = " + std::to_string(candidate.omega()));

    append_residue_check(report, candidate, "prime-divisor-1-mod-3", 3, 1);
    append_residue_check(report, candidate, "prime-divisor-1-mod-6", 6, 1);
    append_residue_check(report, candidate, "prime-divisor-1-mod-10", 10, 1);
    append_order_check(report, candidate);
    append_qk_check(report, candidate, 2);
    append_qk_check(report, candidate, 3);
    append_qk_check(report, candidate, 4);

    const ExactRational sup = abundancy_sup(candidate.primes());
    const ExactRational min_square = abundancy_min_square(candidate.primes());
    const bool feasible = sup > target && min_square <= target;
    append(report, "abundancy-feasible", feasible,
           "sup = " + sup.str() + ", min-square = " + min_square.str());

    // I(n) == 9/5 exactly when 5 sigma(n) == 9 n.
    const ExactRational index = abundancy(candidate);
    append(report, "abundancy-is-9/5", index == target, "I = " + index.str());

    report.overall = true;
    for (const auto& c : report.checks) report.overall = report.overall && c.passed;
    return report;
}

}  // namespace friend10
