#include "minorsum/rings.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace minorsum;

namespace {

// Commutative-ring axioms on randomly embedded integers. Plain integer
// seeds are enough: every element the library ever produces is an image
// of Z under from_integer plus ring operations.
template <Ring R>
void check_axioms(const R& ring, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int rep = 0; rep < 200; ++rep) {
        const auto a = ring.from_integer(BigInt(rng.range(-50, 50)));
        const auto b = ring.from_integer(BigInt(rng.range(-50, 50)));
        const auto c = ring.from_integer(BigInt(rng.range(-50, 50)));

        CHECK(ring.eq(ring.add(a, ring.add(b, c)), ring.add(ring.add(a, b), c)));
        CHECK(ring.eq(ring.add(a, b), ring.add(b, a)));
        CHECK(ring.eq(ring.add(a, ring.zero()), a));
        CHECK(ring.is_zero(ring.add(a, ring.neg(a))));
        CHECK(ring.eq(ring.sub(a, b), ring.add(a, ring.neg(b))));

        CHECK(ring.eq(ring.mul(a, ring.mul(b, c)), ring.mul(ring.mul(a, b), c)));
        CHECK(ring.eq(ring.mul(a, b), ring.mul(b, a)));
        CHECK(ring.eq(ring.mul(a, ring.one()), a));
        CHECK(ring.is_zero(ring.mul(a, ring.zero())));
        CHECK(ring.eq(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c))));
    }
}

template <Ring R>
void check_from_integer_homomorphism(const R& ring, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int rep = 0; rep < 100; ++rep) {
        const BigInt x(rng.range(-40, 40));
        const BigInt y(rng.range(-40, 40));
        CHECK(ring.eq(ring.from_integer(x + y), ring.add(ring.from_integer(x), ring.from_integer(y))));
        CHECK(ring.eq(ring.from_integer(x * y), ring.mul(ring.from_integer(x), ring.from_integer(y))));
        CHECK(ring.eq(ring.from_integer(-x), ring.neg(ring.from_integer(x))));
    }
    CHECK(ring.eq(ring.from_integer(BigInt(0)), ring.zero()));
    CHECK(ring.eq(ring.from_integer(BigInt(1)), ring.one()));
}

template <Ring R>
void check_sign_and_two_pow(const R& ring) {
    for (long e = -9; e <= 9; ++e) {
        const auto expect = (e % 2 == 0) ? ring.one() : ring.neg(ring.one());
        CHECK(ring.eq(sign_power(ring, e), expect));
    }
    for (long e = -6; e <= 6; ++e) {
        for (long f = -6; f <= 6; ++f) {
            CHECK(ring.eq(ring.mul(sign_power(ring, e), sign_power(ring, f)), sign_power(ring, e + f)));
        }
    }
    BigInt p = 1;
    for (long e = 0; e <= 12; ++e) {
        CHECK(ring.eq(two_pow(ring, e), ring.from_integer(p)));
        p *= 2;
    }
}

}  // namespace

TEST_CASE("ring spec parses and prints round-trip") {
    CHECK(RingSpec::parse("int") == RingSpec::integers());
    CHECK(RingSpec::parse("rat") == RingSpec::rationals());
    CHECK(RingSpec::parse("mod:7") == RingSpec::modular(7));
    CHECK(RingSpec::parse("mod:1000000007") == RingSpec::modular(BigInt(1000000007)));

    for (const std::string text : {"int", "rat", "mod:2", "mod:6", "mod:340282366920938463463374607431768211456"}) {
        CHECK(RingSpec::parse(text).to_string() == text);
    }

    CHECK_THROWS(RingSpec::parse(""));
    CHECK_THROWS(RingSpec::parse("integer"));
    CHECK_THROWS(RingSpec::parse("mod:"));
    CHECK_THROWS(RingSpec::parse("mod:1"));
    CHECK_THROWS(RingSpec::parse("mod:0"));
    CHECK_THROWS(RingSpec::parse("mod:-5"));
    CHECK_THROWS(RingSpec::parse("mod:abc"));
    CHECK_THROWS(RingSpec::modular(1));
}

TEST_CASE("ring axioms hold for every supported ring") {
    check_axioms(IntegerRing{}, 11);
    check_axioms(RationalRing{}, 12);
    check_axioms(ModularRing(BigInt(2)), 13);
    check_axioms(ModularRing(BigInt(4)), 14);   // zero divisors
    check_axioms(ModularRing(BigInt(5)), 15);
    check_axioms(ModularRing(BigInt(6)), 16);   // composite, zero divisors
    check_axioms(ModularRing(BigInt("18446744073709551629")), 17);
}

TEST_CASE("from_integer is a ring homomorphism") {
    check_from_integer_homomorphism(IntegerRing{}, 21);
    check_from_integer_homomorphism(RationalRing{}, 22);
    check_from_integer_homomorphism(ModularRing(BigInt(2)), 23);
    check_from_integer_homomorphism(ModularRing(BigInt(9)), 24);
}

TEST_CASE("sign_power and two_pow match their integer definitions") {
    check_sign_and_two_pow(IntegerRing{});
    check_sign_and_two_pow(RationalRing{});
    check_sign_and_two_pow(ModularRing(BigInt(5)));
    check_sign_and_two_pow(ModularRing(BigInt(6)));
}

TEST_CASE("characteristic two collapses signs and doubling") {
    const ModularRing ring((BigInt(2)));
    CHECK(ring.eq(ring.add(ring.one(), ring.one()), ring.zero()));
    CHECK(ring.eq(sign_power(ring, 1), ring.one()));  // -1 == 1 mod 2
    for (long e = 1; e <= 10; ++e) {
        CHECK(ring.is_zero(two_pow(ring, e)));
    }
}

TEST_CASE("modular residues are normalized to [0, m)") {
    const ModularRing ring((BigInt(5)));
    CHECK(ring.from_integer(BigInt(-3)) == BigInt(2));
    CHECK(ring.from_integer(BigInt(12)) == BigInt(2));
    CHECK(ring.neg(ring.from_integer(BigInt(2))) == BigInt(3));
    CHECK(ring.sub(ring.from_integer(BigInt(1)), ring.from_integer(BigInt(4))) == BigInt(2));
}

TEST_CASE("element parsing and printing round-trip") {
    const IntegerRing zint;
    CHECK(zint.to_string(zint.parse("-17")) == "-17");
    CHECK(zint.to_string(zint.parse("0")) == "0");
    CHECK_THROWS(zint.parse("3/2"));
    CHECK_THROWS(zint.parse("seven"));
    CHECK_THROWS(zint.parse(""));

    const RationalRing q;
    CHECK(q.to_string(q.parse("3/2")) == "3/2");
    CHECK(q.to_string(q.parse("5")) == "5/1");
    CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
    CHECK(q.to_string(RationalRing::fraction(BigInt(3), BigInt(-6))) == "-1/2");
    CHECK_THROWS(q.parse("1/0"));
    CHECK_THROWS(RationalRing::fraction(BigInt(1), BigInt(0)));

    const ModularRing m5((BigInt(5)));
    CHECK(m5.to_string(m5.parse("-3")) == "2");
    CHECK(m5.to_string(m5.parse("7")) == "2");
    CHECK_THROWS(m5.parse("x"));
}

TEST_CASE("make_ring dispatches on the ring spec") {
    const AnyRing a = make_ring(RingSpec::integers());
    CHECK(std::holds_alternative<IntegerRing>(a));
    const AnyRing b = make_ring(RingSpec::rationals());
    CHECK(std::holds_alternative<RationalRing>(b));
    const AnyRing c = make_ring(RingSpec::modular(7));
    REQUIRE(std::holds_alternative<ModularRing>(c));
    CHECK(std::get<ModularRing>(c).modulus() == 7);
    std::visit([](const auto& ring) { CHECK(ring.eq(ring.one(), ring.one())); }, c);
}
