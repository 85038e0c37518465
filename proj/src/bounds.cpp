#include "friend10/bounds.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "friend10/primes.hpp"

namespace friend10 {

namespace {

const ExactRational& nine_fifths() {
    static const ExactRational v(9, 5);
    return v;
}

std::array<BoundSpec, 3> build_specs() {
    std::array<BoundSpec, 3> specs = {{
        {2, 7, 3, 2, {7, 3}, {5, 4}, {10, 7}, {25, 14}, 7},
        {3, 180, 41, 3, {180, 41}, {35, 24}, {221, 180}, {1547, 864}, 11},
        {4, 390, 47, 4, {390, 47}, {77, 48}, {437, 390}, {33649, 18720}, 13},
    }};
    for (const auto& s : specs) {
        if (s.prefix * s.ratio_limit != s.composite_limit)
            throw std::logic_error("BoundSpec self-check: prefix * ratio_limit mismatch for k=" +
                                   std::to_string(s.k));
        if (!(s.composite_limit < nine_fifths()))
            throw std::logic_error("BoundSpec self-check: composite limit not below 9/5 for k=" +
                                   std::to_string(s.k));
        if (s.coefficient != ExactRational(s.coeff_num, s.coeff_den) || s.offset != s.k)
            throw std::logic_error("BoundSpec self-check: inconsistent constants for k=" +
                                   std::to_string(s.k));
    }
    return specs;
}

}  // namespace

const BoundSpec& bound_spec(int k) {
    static const std::array<BoundSpec, 3> specs = build_specs();
    if (k < 2 || k > 4) throw std::invalid_argument("bound_spec: k must be 2, 3, or 4");
    return specs[static_cast<std::size_t>(k - 2)];
}

std::uint64_t bound_index(int k, std::uint64_t omega) {
    const BoundSpec& s = bound_spec(k);
    if (omega < 1) throw std::invalid_argument("bound_index: omega must be >= 1");
    const auto num = static_cast<unsigned __int128>(s.coeff_num) * omega;
    const auto den = static_cast<unsigned __int128>(s.coeff_den);
    const unsigned __int128 idx = (num + den - 1) / den;
    if (idx > UINT64_MAX) throw std::overflow_error("bound_index: omega too large");
    return static_cast<std::uint64_t>(idx);
}

BoundRow bound_row(int k, std::uint64_t omega) {
    BoundRow row;
    row.omega = omega;
    row.k = k;
    row.index = bound_index(k, omega);
    row.prime_bound = nth_prime(row.index);
    if (row.index >= 4) {
        row.rosser_form = rosser_bound(row.index);
        if (!(static_cast<double>(row.prime_bound) < *row.rosser_form))
            throw std::logic_error("bound_row: p_index not below its log form at index " +
                                   std::to_string(row.index));
    }
    return row;
}

ExactRational proof_ratio(int k, std::uint64_t omega) {
    const BoundSpec& s = bound_spec(k);
    if (omega < 1) throw std::invalid_argument("proof_ratio: omega must be >= 1");
    const BigInt idx(bound_index(k, omega));
    const BigInt num = idx + BigInt(omega) - s.offset;
    const BigInt den = idx - 1;
    if (den <= 0) throw std::invalid_argument("proof_ratio: degenerate denominator");
    return {num, den};
}

ExactRational proof_ratio_closed_form(int k, std::uint64_t omega) {
    const BoundSpec& s = bound_spec(k);
    if (omega < 1) throw std::invalid_argument("proof_ratio_closed_form: omega must be >= 1");
    const BigInt w(omega);
    const BigInt pw = s.coeff_num * w;
    const BigInt pqw = (s.coeff_num + s.coeff_den) * w;
    const ExactRational frac = frac_part_ratio(pw, BigInt(s.coeff_den));
    if (frac == ExactRational(0)) {
        // ceil(c*omega) is exact: ((P+Q)w - Q*offset) / (Pw - Q).
        return {pqw - s.coeff_den * s.offset, pw - s.coeff_den};
    }
    // ceil(c*omega) = c*omega + 1 - {c*omega}; scaled by Q the ratio becomes
    // ((P+Q)w - Q(offset-1) - Q{Pw/Q}) / (Pw - Q{Pw/Q}).
    const ExactRational qf = ExactRational(s.coeff_den) * frac;
    const ExactRational num = ExactRational(pqw - s.coeff_den * (s.offset - 1)) - qf;
    const ExactRational den = ExactRational(pw) - qf;
    return num / den;
}

VerifyReport verify_ratio_limits(int k, std::uint64_t omega_max) {
    const BoundSpec& s = bound_spec(k);
    if (omega_max < 1) throw std::invalid_argument("verify_ratio_limits: omega_max must be >= 1");
    VerifyReport report;
    for (std::uint64_t omega = 1; omega <= omega_max; ++omega) {
        ++report.checks;
        const ExactRational ratio = proof_ratio(k, omega);
        const ExactRational closed = proof_ratio_closed_form(k, omega);
        if (ratio != closed) {
            report.record_failure("k=" + std::to_string(k) + " omega=" + std::to_string(omega) +
                                  ": ratio " + ratio.str() + " != closed form " + closed.str());
            continue;
        }
        if (!(ratio < s.ratio_limit)) {
            report.record_failure("k=" + std::to_string(k) + " omega=" + std::to_string(omega) +
                                  ": ratio " + ratio.str() + " not below " + s.ratio_limit.str());
            continue;
        }
        if (!(s.prefix * ratio < nine_fifths())) {
            report.record_failure("k=" + std::to_string(k) + " omega=" + std::to_string(omega) +
                                  ": prefix * ratio reaches 9/5");
        }
    }
    return report;
}

VerifyReport verify_fractional_envelope(int k, std::uint64_t omega) {
    const BoundSpec& s = bound_spec(k);
    if (omega < 1)
        throw std::invalid_argument("verify_fractional_envelope: omega must be >= 1");
    const BigInt w(omega);
    const ExactRational frac = frac_part_ratio(s.coeff_num * w, BigInt(s.coeff_den));
    if (frac == ExactRational(0))
        throw std::invalid_argument(
            "verify_fractional_envelope: omega in the divisible branch, envelope vacuous");

    const BigInt pw = s.coeff_num * w;
    const BigInt pqw = (s.coeff_num + s.coeff_den) * w;
    const ExactRational qf = ExactRational(s.coeff_den) * frac;  // in [1, Q-1]
    const ExactRational num = ExactRational(pqw - s.coeff_den * (s.offset - 1)) - qf;
    const ExactRational den = ExactRational(pw) - qf;
    const ExactRational num_lo(pqw - s.coeff_den * (s.offset - 1) - (s.coeff_den - 1));
    const ExactRational num_hi(pqw - s.coeff_den * (s.offset - 1) - 1);
    const ExactRational den_lo(pw - (s.coeff_den - 1));
    const ExactRational den_hi(pw - 1);
    const ExactRational endpoint = num_hi / den_lo;

    VerifyReport report;
    const auto check = [&](bool ok, const char* what) {
        ++report.checks;
        if (!ok)
            report.record_failure("k=" + std::to_string(k) + " omega=" + std::to_string(omega) +
                                  ": " + what);
    };
    check(num_lo <= num, "numerator below its lower envelope");
    check(num <= num_hi, "numerator above its upper envelope");
    check(den_lo <= den, "denominator below its lower envelope");
    check(den <= den_hi, "denominator above its upper envelope");
    check(num / den <= endpoint, "quotient exceeds the endpoint fraction");
    return report;
}

void MonotoneRationalMap::validate() const {
    if (a < 1 || c < 1 || b < 0 || d < 0)
        throw std::invalid_argument("MonotoneRationalMap: requires a,c >= 1 and b,d >= 0");
    if (b * c == a * d)
        throw std::invalid_argument("MonotoneRationalMap: bc == ad makes the map constant");
    if (!(static_cast<long long>(domain_start) * c > d))
        throw std::invalid_argument("MonotoneRationalMap: domain_start must exceed d/c");
}

ExactRational MonotoneRationalMap::eval(long t) const {
    return {BigInt(a) * t - b, BigInt(c) * t - d};
}

VerifyReport verify_monotone_map(const MonotoneRationalMap& map, long t_max) {
    map.validate();
    if (t_max < map.domain_start)
        throw std::invalid_argument("verify_monotone_map: t_max below domain_start");
    const bool up = map.increasing();
    const ExactRational limit = map.limit();
    VerifyReport report;
    ExactRational prev = map.eval(map.domain_start);
    for (long t = map.domain_start; t <= t_max; ++t) {
        ++report.checks;
        const ExactRational value = map.eval(t);
        if (t > map.domain_start) {
            const bool monotone = up ? prev < value : value < prev;
            if (!monotone) {
                report.record_failure("monotonicity broken at t=" + std::to_string(t));
                prev = value;
                continue;
            }
        }
        const bool bounded = up ? value < limit : limit < value;
        if (!bounded)
            report.record_failure("value " + value.str() + " crosses limit " + limit.str() +
                                  " at t=" + std::to_string(t));
        prev = value;
    }
    return report;
}

MonotoneRationalMap envelope_endpoint_map(int k) {
    const BoundSpec& s = bound_spec(k);
    return {s.coeff_num + s.coeff_den, s.coeff_den * (s.offset - 1) + 1, s.coeff_num,
            s.coeff_den - 1, 1};
}

MonotoneRationalMap divisible_branch_map(int k) {
    const BoundSpec& s = bound_spec(k);
    return {s.coeff_num + s.coeff_den, s.coeff_den * s.offset, s.coeff_num, s.coeff_den, 1};
}

MonotoneRationalMap sup_factor_map() { return {1, 0, 1, 1, 2}; }

ExactRational worst_case_tail_sup(int k, std::uint64_t omega) {
    const BoundSpec& s = bound_spec(k);
    if (omega < static_cast<std::uint64_t>(s.k))
        throw std::invalid_argument("worst_case_tail_sup: omega must be >= k");
    const std::uint64_t index = bound_index(k, omega);
    const std::uint64_t tail = omega - static_cast<std::uint64_t>(k);
    const auto table = prime_table_with_count(index + tail);
    static const long kForced[] = {5, 7, 11};
    std::vector<BigInt> primes;
    primes.reserve(omega);
    for (int i = 0; i + 2 <= k; ++i) primes.emplace_back(kForced[i]);
    for (std::uint64_t j = 0; j <= tail; ++j) primes.emplace_back(table->nth(index + j));
    return abundancy_sup(primes);
}

}  // namespace friend10
