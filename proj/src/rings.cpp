#include "minorsum/rings.hpp"

#include <stdexcept>

namespace minorsum {

namespace {

BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal '" + s + "'");
    return BigInt(s);
}

}  // namespace

RingSpec RingSpec::parse(const std::string& text) {
    if (text == "int") return integers();
    if (text == "rat") return rationals();
    if (text.rfind("mod:", 0) == 0) return modular(parse_bigint(text.substr(4)));
    throw std::invalid_argument("bad ring spec '" + text + "' (expected int, rat, or mod:<m>)");
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case RingKind::integers: return "int";
        case RingKind::rationals: return "rat";
        case RingKind::modular: return "mod:" + modulus.str();
    }
    throw std::logic_error("RingSpec: bad kind");
}

IntegerRing::Elem IntegerRing::parse(const std::string& s) const { return parse_bigint(s); }

RationalRing::Elem RationalRing::parse(const std::string& s) const {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Elem(parse_bigint(s));
    return fraction(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

ModularRing::Elem ModularRing::parse(const std::string& s) const {
    return from_integer(parse_bigint(s));
}

AnyRing make_ring(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::integers: return IntegerRing{};
        case RingKind::rationals: return RationalRing{};
        case RingKind::modular: return ModularRing{spec.modulus};
    }
    throw std::logic_error("make_ring: bad kind");
}

}  // namespace minorsum
