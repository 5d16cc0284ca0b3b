#include "evencycle/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evencycle {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), e);
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    const std::size_t deg = poly.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Every monic divisor of degree d in [1, deg/2].
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly divisor(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            divisor[d] = 1;
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::create(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order p^e exceeds the enumeration limit");
    }

    FieldSpec f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<std::uint32_t>(q);

    // Lexicographic order with the constant term most significant.
    bool found = false;
    for (std::uint64_t code = 0; code < q && !found; ++code) {
        Poly cand(e + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = e; i-- > 0;) {
            cand[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        cand[e] = 1;
        if (is_irreducible(cand, p)) {
            f.modulus_ = std::move(cand);
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    if (f.q_ <= kTableLimit) f.build_tables();
    return f;
}

FieldSpec FieldSpec::for_order(std::uint32_t q) {
    auto pe = prime_power_decomposition(q);
    if (!pe) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return create(pe->first, pe->second);
}

std::string FieldSpec::modulus_string() const {
    std::string s;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(modulus_[i]);
    }
    return s;
}

FieldElem FieldSpec::element(std::uint32_t index) const {
    if (index >= q_) throw std::out_of_range("field element index out of range");
    return FieldElem{index};
}

std::vector<std::uint32_t> FieldSpec::coefficients(FieldElem a) const {
    std::vector<std::uint32_t> c(e_, 0);
    std::uint32_t x = a.index;
    for (std::uint32_t i = 0; i < e_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

FieldElem FieldSpec::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
    std::uint32_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (i >= e_ && coeffs[i] != 0) throw std::invalid_argument("coefficient vector exceeds field degree");
        if (i < e_) idx = idx * p_ + coeffs[i] % p_;
    }
    return FieldElem{idx};
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
    if (!add_table_.empty()) return FieldElem{add_table_[a.index * q_ + b.index]};
    if (e_ == 1) return FieldElem{(a.index + b.index) % p_};
    std::uint32_t x = a.index, y = b.index, r = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return FieldElem{r};
}

FieldElem FieldSpec::neg(FieldElem a) const {
    if (!neg_table_.empty()) return FieldElem{neg_table_[a.index]};
    std::uint32_t x = a.index, r = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return FieldElem{r};
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul_poly(FieldElem a, FieldElem b) const {
    const Poly ca = coefficients(a);
    const Poly cb = coefficients(b);
    Poly prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
        }
    }
    return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
}

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
    if (!mul_table_.empty()) return FieldElem{mul_table_[a.index * q_ + b.index]};
    return mul_poly(a, b);
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t n) const {
    FieldElem result = one();
    FieldElem base = a;
    while (n > 0) {
        if (n & 1u) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

FieldElem FieldSpec::inv(FieldElem a) const {
    if (a.index == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (!inv_table_.empty()) return FieldElem{inv_table_[a.index]};
    // a^(q-2) in a group of order q-1.
    return pow(a, q_ - 2);
}

void FieldSpec::build_tables() {
    const std::uint32_t q = q_;
    std::vector<std::uint32_t> add_t(static_cast<std::size_t>(q) * q);
    std::vector<std::uint32_t> mul_t(static_cast<std::size_t>(q) * q);
    std::vector<std::uint32_t> neg_t(q);
    std::vector<std::uint32_t> inv_t(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        neg_t[a] = neg(FieldElem{a}).index;
        for (std::uint32_t b = 0; b < q; ++b) {
            add_t[a * q + b] = add(FieldElem{a}, FieldElem{b}).index;
            const std::uint32_t prod = mul_poly(FieldElem{a}, FieldElem{b}).index;
            mul_t[a * q + b] = prod;
            if (prod == 1) inv_t[a] = b;
        }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
    inv_table_ = std::move(inv_t);
}

std::vector<FieldElem> moment_row(const FieldSpec& field, FieldElem a, unsigned k) {
    std::vector<FieldElem> row;
    row.reserve(k);
    FieldElem power = field.one();
    for (unsigned i = 0; i < k; ++i) {
        row.push_back(power);
        power = field.mul(power, a);
    }
    return row;
}

std::optional<std::pair<FieldElem, FieldElem>> solve2(const FieldSpec& f, FieldElem m00, FieldElem m01,
                                                      FieldElem m10, FieldElem m11, FieldElem r0,
                                                      FieldElem r1) {
    const FieldElem det = f.sub(f.mul(m00, m11), f.mul(m01, m10));
    if (det == f.zero()) return std::nullopt;
    const FieldElem det_inv = f.inv(det);
    const FieldElem s = f.mul(f.sub(f.mul(r0, m11), f.mul(m01, r1)), det_inv);
    const FieldElem t = f.mul(f.sub(f.mul(m00, r1), f.mul(m10, r0)), det_inv);
    return std::make_pair(s, t);
}

unsigned matrix_rank(const FieldSpec& f, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == f.zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const FieldElem scale = f.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = f.mul(x, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == f.zero()) continue;
            const FieldElem factor = rows[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) {
                rows[r][cc] = f.sub(rows[r][cc], f.mul(factor, rows[rank][cc]));
            }
        }
        ++rank;
    }
    return rank;
}

bool check_direction_independence(const FieldSpec& f, unsigned k) {
    const std::uint32_t q = f.q();
    if (q < k) throw std::invalid_argument("direction independence requires q >= k");
    std::vector<std::uint32_t> subset(k);
    std::iota(subset.begin(), subset.end(), 0u);
    while (true) {
        std::vector<std::vector<FieldElem>> rows;
        rows.reserve(k);
        for (std::uint32_t a : subset) rows.push_back(moment_row(f, FieldElem{a}, k));
        if (matrix_rank(f, std::move(rows)) != k) return false;
        // next k-subset in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && subset[i] == q - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (unsigned j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return true;
}

}  // namespace evencycle
