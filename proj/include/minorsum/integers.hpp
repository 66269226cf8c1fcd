#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minorsum {

// Arbitrary-precision integers and rationals used throughout: every formula
// coefficient (factorials, binomials, powers of two) is computed exactly in
// Z before it is embedded into a target ring.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
    BigInt acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// top * (top-1) * ... * (top-count+1); count = 0 gives 1.
inline BigInt falling_factorial(long top, long count) {
    if (count < 0) throw std::invalid_argument("falling_factorial: negative count");
    BigInt acc = 1;
    for (long i = 0; i < count; ++i) acc *= BigInt(top - i);
    return acc;
}

/// C(n, k) with the usual convention: 0 when k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= BigInt(n - k + i);
        acc /= i;  // exact at every step
    }
    return acc;
}

inline BigInt pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

/// SplitMix64: a tiny fully-specified generator, so seeded runs are
/// bit-reproducible across platforms and standard library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [lo, hi] (inclusive). Determinism matters more
    /// than perfect uniformity for test-corpus generation.
    long range(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("SplitMix64::range: empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

  private:
    std::uint64_t state_;
};

}  // namespace minorsum
