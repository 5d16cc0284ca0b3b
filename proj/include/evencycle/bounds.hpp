#ifndef EVENCYCLE_BOUNDS_HPP
#define EVENCYCLE_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace evencycle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// m^2 / (2 q^5) - m / 2, exactly.
Rational convexity_lower_bound(const BigInt& m, std::uint64_t q);

/// The value q^{3/2} + q, held as q + q * sqrt(q) with sqrt(q) symbolic.
///
/// Comparisons against rationals are exact; ceil() is the smallest integer
/// not below the value.
class KstCap {
  public:
    explicit KstCap(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    bool exact_integer() const { return square_; }
    BigInt ceil() const;
    double approx() const;
    /// value <= x.
    bool le(const Rational& x) const;
    /// x <= value.
    bool ge(const Rational& x) const;

  private:
    std::uint64_t q_;
    bool square_;
};

/// (a + b * sqrt(q)) with integers a, b >= 0: the per-pair-sum cap
/// C(q,2) * q^3 * (q^{3/2} + q).
struct KstTotal {
    BigInt rational_part;
    BigInt sqrt_coefficient;
    std::uint64_t q = 0;

    BigInt ceil() const;
    double approx() const;
    /// x <= value, exactly.
    bool ge(const Rational& x) const;
};

KstTotal kst_cap_total(std::uint64_t q);

/// Largest integer m with m^2/(2q^5) - m/2 <= C(q,2) q^3 (q^{3/2} + q).
BigInt c8free_upper_bound(std::uint64_t q);

struct BoundRow {
    std::uint64_t q = 0;
    BigInt bound;
    Rational ratio;  // B(q) / q^6
    bool chain_tight = false;  // lower bound admits B(q) and rejects B(q) + 1
};

/// Rows for the prime powers in [qmin, qmax].
std::vector<BoundRow> bound_table(std::uint64_t qmin, std::uint64_t qmax);

/// First q whose bound is non-trivial, i.e. B(q) < q^6; 0 if none.
std::uint64_t ratio_crossover(const std::vector<BoundRow>& rows);
bool ratio_strictly_decreasing_from(const std::vector<BoundRow>& rows, std::uint64_t from);

/// Least-squares slope of log B(q) against log q over rows with q in [lo, hi].
double log_log_slope(const std::vector<BoundRow>& rows, std::uint64_t lo, std::uint64_t hi);

std::string decimal(const Rational& x, int places);

}  // namespace evencycle

#endif
