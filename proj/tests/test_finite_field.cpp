#include <doctest.h>

#include <stdexcept>

#include "evencycle/finite_field.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

const std::uint32_t kSmallOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("prime power decomposition") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(prime_power_decomposition(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
    CHECK(prime_power_decomposition(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
    CHECK_FALSE(prime_power_decomposition(12));
    CHECK_FALSE(prime_power_decomposition(1));
    CHECK_THROWS_AS(FieldSpec::for_order(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::create(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::create(3, 0), std::invalid_argument);
}

TEST_CASE("modulus is the smallest irreducible, constant term first") {
    const FieldSpec f9 = FieldSpec::for_order(9);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(f9.modulus_string() == "1,0,1");
    for (std::uint32_t q : kSmallOrders) {
        const FieldSpec f = FieldSpec::for_order(q);
        CAPTURE(q);
        CHECK(f.modulus() == oracle::smallest_irreducible(f.p(), f.e()));
        CHECK(is_irreducible(f.modulus(), f.p()));
    }
    CHECK_FALSE(is_irreducible({0, 0, 1}, 3));  // x^2
    CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (std::uint32_t q : kSmallOrders) {
        const FieldSpec f = FieldSpec::for_order(q);
        const oracle::Field o(f.p(), f.e(), f.modulus());
        CAPTURE(q);
        bool ok = true;
        for (std::uint32_t a = 0; a < q; ++a) {
            const FieldElem ea{a};
            ok = ok && f.add(ea, f.neg(ea)) == f.zero();
            if (a != 0) ok = ok && f.mul(ea, f.inv(ea)) == f.one();
            ok = ok && f.from_coefficients(f.coefficients(ea)) == ea;
            for (std::uint32_t b = 0; b < q; ++b) {
                const FieldElem eb{b};
                ok = ok && f.add(ea, eb).index == o.add(a, b) && f.mul(ea, eb).index == o.mul(a, b);
                ok = ok && f.mul_poly(ea, eb) == f.mul(ea, eb);
                ok = ok && f.add(ea, eb) == f.add(eb, ea) && f.mul(ea, eb) == f.mul(eb, ea);
                ok = ok && f.sub(ea, eb).index == o.sub(a, b);
                for (std::uint32_t c = 0; c < q; ++c) {
                    const FieldElem ec{c};
                    ok = ok && f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec));
                    ok = ok && f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec));
                    ok = ok && f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("inverse of zero and element range") {
    const FieldSpec f = FieldSpec::for_order(5);
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    CHECK_THROWS_AS(f.element(5), std::out_of_range);
    CHECK(f.pow(FieldElem{2}, 4) == f.one());
    CHECK(f.pow(FieldElem{3}, 0) == f.one());
}

TEST_CASE("moment rows") {
    const FieldSpec f5 = FieldSpec::for_order(5);
    CHECK(moment_row(f5, FieldElem{0}, 5) ==
          std::vector<FieldElem>{FieldElem{1}, FieldElem{0}, FieldElem{0}, FieldElem{0}, FieldElem{0}});
    const FieldSpec f4 = FieldSpec::for_order(4);
    const FieldElem g{2};
    CHECK(moment_row(f4, g, 3) == std::vector<FieldElem>{f4.one(), g, f4.mul(g, g)});
    CHECK(moment_row(f4, g, 3) == moment_row(f4, g, 3));
}

TEST_CASE("solve2") {
    const FieldSpec f3 = FieldSpec::for_order(3);
    const FieldElem z{0}, one{1}, two{2};
    CHECK(solve2(f3, one, z, z, one, two, one) == std::pair{two, one});
    // [[1,1],[1,2]] (s,t) = (0,1): the oracle scans all nine pairs.
    std::optional<std::pair<FieldElem, FieldElem>> scan;
    for (std::uint32_t s = 0; s < 3; ++s) {
        for (std::uint32_t t = 0; t < 3; ++t) {
            if ((s + t) % 3 == 0 && (s + 2 * t) % 3 == 1) scan = std::pair{FieldElem{s}, FieldElem{t}};
        }
    }
    REQUIRE(scan);
    CHECK(*scan == std::pair{two, one});
    CHECK(solve2(f3, one, one, one, two, z, one) == scan);
    CHECK_FALSE(solve2(f3, one, two, two, one, one, one));  // det = 1 - 4 = 0 mod 3
}

TEST_CASE("direction independence") {
    CHECK(check_direction_independence(FieldSpec::for_order(5), 5));
    CHECK(check_direction_independence(FieldSpec::for_order(7), 5));
    CHECK(check_direction_independence(FieldSpec::for_order(16), 5));
    CHECK(check_direction_independence(FieldSpec::for_order(2), 2));
    for (std::uint32_t q : kSmallOrders) {
        for (unsigned k = 1; k <= 5 && k <= q; ++k) CHECK(check_direction_independence(FieldSpec::for_order(q), k));
    }
    CHECK_THROWS_AS(check_direction_independence(FieldSpec::for_order(3), 5), std::invalid_argument);
    const FieldSpec f5 = FieldSpec::for_order(5);
    CHECK(matrix_rank(f5, {{FieldElem{1}, FieldElem{2}}, {FieldElem{2}, FieldElem{4}}}) == 1);
}
