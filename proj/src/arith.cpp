#include "friend10/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace friend10 {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational::ExactRational(long num, long den) : ExactRational(BigInt(num), BigInt(den)) {}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.q_ == 0) throw std::domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.q_ = -q_;
    return r;
}

std::string ExactRational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

namespace {

// Primes up to 1e6 for trial division; built once, then read-only.
const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long kLimit = 1'000'000;
        std::vector<bool> composite(kLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// One strong-probable-prime round. n must be odd and > 2.
bool strong_probable_prime(const BigInt& n, const BigInt& base) {
    BigInt d = n - 1;
    const unsigned long twos = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

constexpr unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Pollard rho, Brent cycle finding with batched gcds. n must be composite,
// odd, and coprime to the bases tried by the caller's trial division.
BigInt pollard_brent(const BigInt& n) {
    constexpr unsigned long kBatch = 128;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const unsigned long steps = std::min(kBatch, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // gcd collapsed inside a batch; replay one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned long p : kMrBases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    if (n < 41 * 41) return true;
    // {2,...,37} is a deterministic Miller-Rabin base set below 3.317e24.
    static const BigInt kDeterministicCeiling("3317044064679887385961981");
    if (n < kDeterministicCeiling) {
        for (unsigned long b : kMrBases) {
            if (!strong_probable_prime(n, BigInt(b))) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization::Factorization(std::vector<FactorEntry> entries) : entries_(std::move(entries)) {
    const BigInt* prev = nullptr;
    for (const auto& e : entries_) {
        if (e.exponent < 1) throw std::invalid_argument("Factorization: exponent must be >= 1");
        if (prev && !(*prev < e.prime))
            throw std::invalid_argument("Factorization: primes must be strictly increasing");
        if (!is_prime(e.prime))
            throw std::invalid_argument("Factorization: " + e.prime.get_str() + " is not prime");
        prev = &e.prime;
    }
}

BigInt Factorization::value() const {
    BigInt v = 1, pk;
    for (const auto& e : entries_) {
        mpz_pow_ui(pk.get_mpz_t(), e.prime.get_mpz_t(), e.exponent);
        v *= pk;
    }
    return v;
}

bool Factorization::is_square() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FactorEntry& e) { return e.exponent % 2 == 0; });
}

std::vector<BigInt> Factorization::primes() const {
    std::vector<BigInt> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.prime);
    return out;
}

std::optional<unsigned long> Factorization::exponent_of(const BigInt& p) const {
    for (const auto& e : entries_) {
        if (e.prime == p) return e.exponent;
    }
    return std::nullopt;
}

Factorization factorize(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be a positive integer");
    // Trial division up to the crossover, then primality-gated rho splitting.
    // Scanning the full small-prime table would dominate on large prime
    // cofactors; rho finds any factor above the crossover far faster.
    constexpr unsigned long kTrialCrossover = 4096;
    std::map<BigInt, unsigned long> counts;
    BigInt rem = n;
    for (unsigned long p : small_primes()) {
        if (p > kTrialCrossover) break;
        if (mpz_cmp_ui(rem.get_mpz_t(), p * p) < 0) break;
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        do {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
        counts[BigInt(p)] = e;
    }
    if (rem > 1) {
        std::vector<BigInt> pending{rem};
        while (!pending.empty()) {
            BigInt m = std::move(pending.back());
            pending.pop_back();
            if (is_prime(m)) {
                ++counts[m];
                continue;
            }
            BigInt d = pollard_brent(m);
            pending.push_back(m / d);
            pending.push_back(std::move(d));
        }
    }
    std::vector<FactorEntry> entries;
    entries.reserve(counts.size());
    for (auto& [p, e] : counts) entries.push_back({p, e});
    return Factorization(std::move(entries));
}

BigInt sigma(const Factorization& f) {
    BigInt result = 1, pk;
    for (const auto& e : f.entries()) {
        mpz_pow_ui(pk.get_mpz_t(), e.prime.get_mpz_t(), e.exponent + 1);
        result *= (pk - 1) / (e.prime - 1);
    }
    return result;
}

ExactRational abundancy(const Factorization& f) { return {sigma(f), f.value()}; }

namespace {

void validate_prime_sequence(const std::vector<BigInt>& primes, const char* who) {
    const BigInt* prev = nullptr;
    for (const auto& p : primes) {
        if (prev && !(*prev < p))
            throw std::invalid_argument(std::string(who) + ": primes must be strictly increasing");
        if (!is_prime(p))
            throw std::invalid_argument(std::string(who) + ": " + p.get_str() + " is not prime");
        prev = &p;
    }
}

}  // namespace

ExactRational abundancy_sup(const std::vector<BigInt>& primes) {
    validate_prime_sequence(primes, "abundancy_sup");
    ExactRational product(1);
    for (const auto& p : primes) product *= ExactRational(p, p - 1);
    return product;
}

ExactRational abundancy_min_square(const std::vector<BigInt>& primes) {
    validate_prime_sequence(primes, "abundancy_min_square");
    ExactRational product(1);
    for (const auto& p : primes) product *= ExactRational(p * p + p + 1, p * p);
    return product;
}

BigInt ceil_ratio(const BigInt& a, const BigInt& b) {
    if (b < 1) throw std::invalid_argument("ceil_ratio: denominator must be positive");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt floor_ratio(const BigInt& a, const BigInt& b) {
    if (b < 1) throw std::invalid_argument("floor_ratio: denominator must be positive");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

ExactRational frac_part_ratio(const BigInt& a, const BigInt& b) {
    if (b < 1) throw std::invalid_argument("frac_part_ratio: denominator must be positive");
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());  // in [0, b)
    return {r, b};
}

Factorization parse_factorization(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_factorization: empty input");
    std::vector<FactorEntry> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t star = std::min(text.find('*', pos), text.size());
        std::string_view term = text.substr(pos, star - pos);
        const std::size_t caret = term.find('^');
        std::string_view prime_part = term.substr(0, caret == term.npos ? term.size() : caret);
        std::string_view exp_part = caret == term.npos ? std::string_view{} : term.substr(caret + 1);

        auto all_digits = [](std::string_view s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
                return std::isdigit(c) != 0;
            });
        };
        if (!all_digits(prime_part))
            throw std::invalid_argument("parse_factorization: malformed prime in '" +
                                        std::string(term) + "'");
        BigInt p(std::string(prime_part), 10);
        unsigned long e = 1;
        if (caret != term.npos) {
            if (!all_digits(exp_part))
                throw std::invalid_argument("parse_factorization: malformed exponent in '" +
                                            std::string(term) + "'");
            e = std::stoul(std::string(exp_part));
        }
        entries.push_back({std::move(p), e});
        if (star == text.size()) break;
        pos = star + 1;
        if (pos == text.size())
            throw std::invalid_argument("parse_factorization: trailing separator");
    }
    return Factorization(std::move(entries));  // validates primality and ordering
}

std::string format_factorization(const Factorization& f) {
    if (f.entries().empty()) return "1";
    std::string out;
    for (const auto& e : f.entries()) {
        if (!out.empty()) out += '*';
        out += e.prime.get_str();
        if (e.exponent != 1) {
            out += '^';
            out += std::to_string(e.exponent);
        }
    }
    return out;
}

}  // namespace friend10
