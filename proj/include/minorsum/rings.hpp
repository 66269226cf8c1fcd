#pragma once

#include "minorsum/integers.hpp"

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace minorsum {

enum class RingKind { integers, rationals, modular };

/// Names one of the supported coefficient rings: Z, Q, or Z/mZ.
/// Composite moduli are allowed; nothing in the library divides by a ring
/// element, and zero divisors stress-test the identities.
struct RingSpec {
    RingKind kind = RingKind::integers;
    BigInt modulus = 0;  // meaningful only for modular

    static RingSpec integers() { return {RingKind::integers, 0}; }
    static RingSpec rationals() { return {RingKind::rationals, 0}; }
    static RingSpec modular(BigInt m) {
        if (m < 2) throw std::invalid_argument("RingSpec: modulus must be >= 2");
        return {RingKind::modular, std::move(m)};
    }

    /// Parses "int", "rat", or "mod:<m>".
    static RingSpec parse(const std::string& text);

    std::string to_string() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// A commutative ring with identity, presented as a context object whose
/// element type carries no ring information of its own. All coefficient
/// arithmetic is division-free, so the same code runs over Z/mZ with
/// composite m.
template <class R>
concept Ring = std::copyable<R> && requires(const R r, const typename R::Elem a, const typename R::Elem b, const BigInt z) {
    typename R::Elem;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.sub(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.eq(a, b) } -> std::same_as<bool>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.from_integer(z) } -> std::same_as<typename R::Elem>;
};

class IntegerRing {
  public:
    using Elem = BigInt;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem from_integer(const BigInt& z) const { return z; }

    std::string to_string(const Elem& a) const { return a.str(); }
    Elem parse(const std::string& s) const;
    RingSpec spec() const { return RingSpec::integers(); }
};

class RationalRing {
  public:
    using Elem = BigRat;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem from_integer(const BigInt& z) const { return Elem(z); }

    /// Canonical "p/q" form, q > 0 and gcd(p, q) = 1.
    std::string to_string(const Elem& a) const {
        return numerator(a).str() + "/" + denominator(a).str();
    }
    Elem parse(const std::string& s) const;
    RingSpec spec() const { return RingSpec::rationals(); }

    /// Only test/IO code builds non-integer values; the algorithms never divide.
    static Elem fraction(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::invalid_argument("rational: zero denominator");
        return Elem(num) / Elem(den);
    }
};

/// Z/mZ with residues normalized to [0, m). m >= 2, composite allowed.
class ModularRing {
  public:
    using Elem = BigInt;

    explicit ModularRing(BigInt modulus) : m_(std::move(modulus)) {
        if (m_ < 2) throw std::invalid_argument("ModularRing: modulus must be >= 2");
    }

    const BigInt& modulus() const { return m_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % m_; }  // collapses for m = 1, which is rejected anyway
    Elem add(const Elem& a, const Elem& b) const { return (a + b) % m_; }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % m_; }
    Elem neg(const Elem& a) const { return reduce(-a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem from_integer(const BigInt& z) const { return reduce(z); }

    std::string to_string(const Elem& a) const { return a.str(); }
    Elem parse(const std::string& s) const;
    RingSpec spec() const { return RingSpec::modular(m_); }

  private:
    Elem reduce(BigInt v) const {
        v %= m_;
        if (v < 0) v += m_;
        return v;
    }

    BigInt m_;
};

static_assert(Ring<IntegerRing>);
static_assert(Ring<RationalRing>);
static_assert(Ring<ModularRing>);

/// (-1)^e interpreted by parity; e may be negative.
template <Ring R>
typename R::Elem sign_power(const R& ring, long e) {
    return (e % 2 == 0) ? ring.one() : ring.neg(ring.one());
}

/// (1+1)^e with 2^e computed in Z first.
template <Ring R>
typename R::Elem two_pow(const R& ring, long e) {
    return ring.from_integer(pow2(e));
}

/// Runtime-selected ring; the CLI dispatches on this once per suite.
using AnyRing = std::variant<IntegerRing, RationalRing, ModularRing>;

AnyRing make_ring(const RingSpec& spec);

}  // namespace minorsum
