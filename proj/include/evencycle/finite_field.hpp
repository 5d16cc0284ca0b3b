#ifndef EVENCYCLE_FINITE_FIELD_HPP
#define EVENCYCLE_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evencycle {

/// An element of GF(p^e), identified by its canonical index.
///
/// The index is the little-endian base-p encoding of the coefficient vector
/// of the representative polynomial, so index 0 is zero and index 1 is one.
struct FieldElem {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Arithmetic context for GF(p^e).
///
/// Immutable after construction. The modulus is the lexicographically smallest
/// monic irreducible polynomial of degree e (coefficients compared from the
/// constant term upward), so two FieldSpecs with the same (p, e) are
/// identical on every machine.
class FieldSpec {
  public:
    /// Throws std::invalid_argument if p is not prime, e == 0, or p^e is
    /// too large to enumerate.
    static FieldSpec create(std::uint32_t p, std::uint32_t e);

    /// Field with exactly q elements; q must be a prime power.
    static FieldSpec for_order(std::uint32_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, constant term first, length e + 1, last entry 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }
    /// Throws std::out_of_range if index >= q.
    FieldElem element(std::uint32_t index) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// Throws std::domain_error for a == 0.
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t n) const;

    /// Table-free reference multiplication (polynomial product reduced by
    /// the modulus). mul() agrees with it; tables are only a cache.
    FieldElem mul_poly(FieldElem a, FieldElem b) const;

    std::vector<std::uint32_t> coefficients(FieldElem a) const;
    FieldElem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.e_ == b.e_;
    }

  private:
    FieldSpec() = default;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    // Cached for q <= kTableLimit; empty otherwise.
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
};

inline constexpr std::uint32_t kTableLimit = 256;

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint64_t q);

/// Exhaustive divisor test: true iff the monic polynomial (constant term
/// first) has no monic factor of degree 1..deg/2 over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// (1, a, a^2, ..., a^{k-1}).
std::vector<FieldElem> moment_row(const FieldSpec& field, FieldElem a, unsigned k);

/// Unique solution of [[m00, m01], [m10, m11]] (s, t)^T = (r0, r1)^T, or
/// nullopt when the determinant vanishes.
std::optional<std::pair<FieldElem, FieldElem>> solve2(const FieldSpec& field, FieldElem m00,
                                                      FieldElem m01, FieldElem m10, FieldElem m11,
                                                      FieldElem r0, FieldElem r1);

/// Rank of a dense matrix over the field (rows of equal length).
unsigned matrix_rank(const FieldSpec& field, std::vector<std::vector<FieldElem>> rows);

/// True iff every k of the q moment-curve directions are linearly
/// independent. Throws std::invalid_argument when q < k.
bool check_direction_independence(const FieldSpec& field, unsigned k);

}  // namespace evencycle

#endif
