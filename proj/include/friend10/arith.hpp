#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace friend10 {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Every comparison is exact (cross-multiplication inside GMP); nothing in
// this class ever rounds. All inequality verdicts in the toolkit go through
// this type; doubles are for display only.
class ExactRational {
public:
    ExactRational() : q_(0) {}
    ExactRational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit ExactRational(const BigInt& n) : q_(n) {}
    ExactRational(const BigInt& num, const BigInt& den);
    ExactRational(long num, long den);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    // Serialized as "num/den", denominator always explicit ("1/1", "9/5").
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;  // kept canonical at all times
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

struct FactorEntry {
    BigInt prime;
    unsigned long exponent = 1;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

// Canonical prime-power decomposition of a positive integer. The empty
// factorization represents 1. Construction validates that primes are
// strictly increasing, actually prime, and that exponents are >= 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<FactorEntry> entries);

    const std::vector<FactorEntry>& entries() const { return entries_; }
    std::size_t omega() const { return entries_.size(); }
    BigInt value() const;
    bool is_square() const;
    std::vector<BigInt> primes() const;
    std::optional<unsigned long> exponent_of(const BigInt& p) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<FactorEntry> entries_;
};

// Primality test, exact for every size this toolkit handles: trial division
// by small primes, then a Miller-Rabin base set that is deterministic below
// 3.317e24, then GMP's probable-prime test with 40 rounds beyond that.
bool is_prime(const BigInt& n);

// Trial division by sieved primes up to 1e6, then Pollard-Brent splitting of
// any remaining cofactor. Rejects n < 1; factorize(1) is the empty product.
Factorization factorize(const BigInt& n);

// Sum of divisors: product of (p^(e+1) - 1)/(p - 1) over the entries.
BigInt sigma(const Factorization& f);

// Abundancy index sigma(n)/n in lowest terms.
ExactRational abundancy(const Factorization& f);

// Strict upper bound on the abundancy of any integer supported exactly on
// `primes`: product of p/(p-1). Empty sequence gives 1/1.
ExactRational abundancy_sup(const std::vector<BigInt>& primes);

// Abundancy of the product of squares of `primes`: the minimum index any
// perfect square supported on exactly these primes can have, since the
// index grows strictly with every extra exponent.
ExactRational abundancy_min_square(const std::vector<BigInt>& primes);

// Exact ceiling/floor/fractional part of a/b without floating point.
// b must be positive; a may be negative.
BigInt ceil_ratio(const BigInt& a, const BigInt& b);
BigInt floor_ratio(const BigInt& a, const BigInt& b);
ExactRational frac_part_ratio(const BigInt& a, const BigInt& b);

// Text form "5^2*7^4*11^2": strictly increasing primes, '^' exponent (may be
// omitted when 1), '*' separator. format_factorization(1) == "1"; the parser
// accepts only the product form and rejects non-primes and misordered input.
Factorization parse_factorization(std::string_view text);
std::string format_factorization(const Factorization& f);

}  // namespace friend10
