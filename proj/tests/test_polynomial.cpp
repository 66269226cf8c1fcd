#include "minorsum/polynomial.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace minorsum;

namespace {

const IntegerRing kInt;

Polynomial<IntegerRing> ipoly(std::vector<long> coeffs_low_to_high) {
    Polynomial<IntegerRing> p;
    for (long c : coeffs_low_to_high) p.coeffs.push_back(BigInt(c));
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic on small fixed inputs") {
    const auto one_plus_x = ipoly({1, 1});
    const auto sq = poly_mul(kInt, one_plus_x, one_plus_x);
    CHECK(poly_eq(kInt, sq, ipoly({1, 2, 1})));

    CHECK(poly_eq(kInt, poly_add(kInt, ipoly({1, 2}), ipoly({3, -2, 5})), ipoly({4, 0, 5})));
    CHECK(poly_eq(kInt, poly_neg(kInt, ipoly({1, -2})), ipoly({-1, 2})));
    CHECK(poly_eq(kInt, poly_mul(kInt, ipoly({0}), ipoly({4, 5})), ipoly({0})));

    // equality ignores trailing-zero padding
    CHECK(poly_eq(kInt, ipoly({1, 2, 0, 0}), ipoly({1, 2})));
    CHECK_FALSE(poly_eq(kInt, ipoly({1, 2}), ipoly({1, 2, 3})));

    auto padded = ipoly({5, 0, 0});
    poly_normalize(kInt, padded);
    CHECK(padded.coeffs.size() == 1);
    auto zero = ipoly({0, 0});
    poly_normalize(kInt, zero);
    CHECK(zero.coeffs.size() == 1);
    CHECK(kInt.is_zero(zero.coeffs[0]));
}

TEST_CASE("polynomial ring satisfies ring laws on random elements") {
    const PolynomialRing<IntegerRing> pring(kInt);
    SplitMix64 rng(61);
    auto random_poly = [&]() {
        Polynomial<IntegerRing> p;
        const long deg = rng.range(0, 3);
        for (long i = 0; i <= deg; ++i) p.coeffs.push_back(BigInt(rng.range(-3, 3)));
        return p;
    };
    for (int rep = 0; rep < 50; ++rep) {
        const auto a = random_poly();
        const auto b = random_poly();
        const auto c = random_poly();
        CHECK(pring.eq(pring.mul(a, pring.mul(b, c)), pring.mul(pring.mul(a, b), c)));
        CHECK(pring.eq(pring.mul(a, b), pring.mul(b, a)));
        CHECK(pring.eq(pring.mul(a, pring.add(b, c)), pring.add(pring.mul(a, b), pring.mul(a, c))));
        CHECK(pring.eq(pring.add(a, pring.neg(a)), pring.zero()));
        CHECK(pring.eq(pring.mul(a, pring.one()), a));
    }

    // degree can drop over zero divisors: (2x)(3x) = 0 mod 6
    const ModularRing m6((BigInt(6)));
    const PolynomialRing<ModularRing> p6(m6);
    Polynomial<ModularRing> two_x{{m6.zero(), m6.from_integer(BigInt(2))}};
    Polynomial<ModularRing> three_x{{m6.zero(), m6.from_integer(BigInt(3))}};
    CHECK(p6.is_zero(p6.mul(two_x, three_x)));
}

TEST_CASE("charpoly of fixed matrices: det(xI + A) conventions") {
    // identity: (x + 1)^2 = x^2 + 2x + 1
    const auto id2 = Matrix<IntegerRing>::identity(kInt, 2);
    CHECK(poly_eq(kInt, charpoly_coeffs(id2), ipoly({1, 2, 1})));

    // zero matrix: x^n
    for (std::size_t n = 1; n <= 4; ++n) {
        Matrix<IntegerRing> z(kInt, n, n);
        auto p = charpoly_coeffs(z);
        REQUIRE(p.coeffs.size() == n + 1);
        for (std::size_t i = 0; i < n; ++i) CHECK(kInt.is_zero(p.coeffs[i]));
        CHECK(p.coeffs[n] == 1);
    }

    // diag(a, b): x^2 + (a+b) x + ab
    const auto diag = matrix_from_ints(kInt, {{3, 0}, {0, 5}});
    CHECK(poly_eq(kInt, charpoly_coeffs(diag), ipoly({15, 8, 1})));

    // generic 2x2: constant term is det(A), not (-1)^n det(A)
    const auto a = matrix_from_ints(kInt, {{1, 2}, {3, 4}});
    CHECK(poly_eq(kInt, charpoly_coeffs(a), ipoly({-2, 5, 1})));

    CHECK_THROWS(charpoly_coeffs(matrix_from_ints(kInt, {{1, 2, 3}, {4, 5, 6}})));
}

TEST_CASE("charpoly coefficient of x^{n-k} equals the k-th principal minor sum") {
    SplitMix64 rng(62);
    auto check_ring = [&](auto ring) {
        for (int rep = 0; rep < 8; ++rep) {
            const auto n = static_cast<std::size_t>(rng.range(1, 4));
            const auto a = oracle::random_matrix(ring, rng, n, n);
            const auto p = charpoly_coeffs(a);
            REQUIRE(p.coeffs.size() == n + 1);
            for (int k = 0; k <= static_cast<int>(n); ++k) {
                CHECK(ring.eq(p.coeffs[n - static_cast<std::size_t>(k)], principal_minor_sum(a, k)));
            }
        }
    };
    check_ring(kInt);
    check_ring(RationalRing{});
    check_ring(ModularRing(BigInt(7)));
    check_ring(ModularRing(BigInt(2)));
}

TEST_CASE("charpoly stays length n+1 when leading minors vanish mod m") {
    const ModularRing m2((BigInt(2)));
    const auto a = matrix_from_ints(m2, {{1, 1}, {1, 1}});
    const auto p = charpoly_coeffs(a);
    REQUIRE(p.coeffs.size() == 3);
    CHECK(m2.is_zero(p.coeffs[0]));  // det = 0 mod 2
    CHECK(m2.is_zero(p.coeffs[1]));  // trace = 2 = 0 mod 2
    CHECK(m2.eq(p.coeffs[2], m2.one()));
}
