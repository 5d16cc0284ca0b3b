#include "evencycle/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "evencycle/finite_field.hpp"

namespace evencycle {

namespace {

BigInt ceil_sqrt(const BigInt& n) {
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n ? r : r + 1;
}

BigInt pow_big(std::uint64_t base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

}  // namespace

Rational convexity_lower_bound(const BigInt& m, std::uint64_t q) {
    if (m < 0) throw std::invalid_argument("edge count must be non-negative");
    const BigInt q5 = pow_big(q, 5);
    return Rational(m * m, 2 * q5) - Rational(m, 2);
}

KstCap::KstCap(std::uint64_t q) : q_(q) {
    if (q < 2) throw std::invalid_argument("KST cap needs q >= 2");
    const BigInt r = boost::multiprecision::sqrt(BigInt(q));
    square_ = r * r == q;
}

BigInt KstCap::ceil() const { return BigInt(q_) + ceil_sqrt(pow_big(q_, 3)); }

double KstCap::approx() const {
    const double q = static_cast<double>(q_);
    return q * std::sqrt(q) + q;
}

bool KstCap::le(const Rational& x) const {
    const Rational y = x - Rational(q_);
    if (y < 0) return false;
    return Rational(pow_big(q_, 3)) <= y * y;
}

bool KstCap::ge(const Rational& x) const {
    const Rational y = x - Rational(q_);
    if (y <= 0) return true;
    return y * y <= Rational(pow_big(q_, 3));
}

KstTotal kst_cap_total(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("KST cap needs q >= 2");
    const BigInt pairs = BigInt(q) * (q - 1) / 2;
    // C(q,2) q^3 (q + q sqrt q) = C(q,2) q^4 + C(q,2) q^4 sqrt q
    const BigInt part = pairs * pow_big(q, 4);
    return KstTotal{part, part, q};
}

BigInt KstTotal::ceil() const { return rational_part + ceil_sqrt(sqrt_coefficient * sqrt_coefficient * q); }

double KstTotal::approx() const {
    return rational_part.convert_to<double>() + sqrt_coefficient.convert_to<double>() * std::sqrt(double(q));
}

bool KstTotal::ge(const Rational& x) const {
    const Rational y = x - Rational(rational_part);
    if (y <= 0) return true;
    return y * y <= Rational(sqrt_coefficient * sqrt_coefficient * q);
}

BigInt c8free_upper_bound(std::uint64_t q) {
    const KstTotal cap = kst_cap_total(q);
    auto admissible = [&](const BigInt& m) { return cap.ge(convexity_lower_bound(m, q)); };
    // m^2 - q^5 m - 2 q^5 T <= 0 for the float estimate of T, then settle exactly.
    const long double q5 = std::pow(static_cast<long double>(q), 5);
    const long double t = cap.approx();
    const long double estimate = (q5 + std::sqrt(q5 * q5 + 8.0L * q5 * t)) / 2.0L;
    BigInt m(static_cast<unsigned long long>(std::floor(estimate)));
    while (m > 0 && !admissible(m)) --m;
    while (admissible(m + 1)) ++m;
    return m;
}

std::vector<BoundRow> bound_table(std::uint64_t qmin, std::uint64_t qmax) {
    if (qmin < 2 || qmax < qmin) throw std::invalid_argument("bound table needs 2 <= qmin <= qmax");
    std::vector<BoundRow> rows;
    for (std::uint64_t q = qmin; q <= qmax; ++q) {
        if (!prime_power_decomposition(q)) continue;
        BoundRow row;
        row.q = q;
        row.bound = c8free_upper_bound(q);
        row.ratio = Rational(row.bound, pow_big(q, 6));
        const KstTotal cap = kst_cap_total(q);
        row.chain_tight = cap.ge(convexity_lower_bound(row.bound, q)) &&
                          !cap.ge(convexity_lower_bound(row.bound + 1, q));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t ratio_crossover(const std::vector<BoundRow>& rows) {
    for (const auto& r : rows) {
        if (r.ratio < 1) return r.q;
    }
    return 0;
}

bool ratio_strictly_decreasing_from(const std::vector<BoundRow>& rows, std::uint64_t from) {
    const BoundRow* prev = nullptr;
    for (const auto& r : rows) {
        if (r.q < from) continue;
        if (prev && !(r.ratio < prev->ratio)) return false;
        prev = &r;
    }
    return true;
}

double log_log_slope(const std::vector<BoundRow>& rows, std::uint64_t lo, std::uint64_t hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& r : rows) {
        if (r.q < lo || r.q > hi) continue;
        const double x = std::log(static_cast<double>(r.q));
        const double y = std::log(r.bound.convert_to<double>());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("slope fit needs at least two rows");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string decimal(const Rational& x, int places) {
    const bool negative = x < 0;
    const Rational ax = negative ? Rational(-x) : x;
    const BigInt scale = pow_big(10, static_cast<unsigned>(places));
    const Rational scaled = ax * scale;
    const BigInt floored = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    std::string digits = floored.str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - places, ".");
    }
    return (negative ? "-" : "") + digits;
}

}  // namespace evencycle
