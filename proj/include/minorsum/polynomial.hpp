#pragma once

#include "minorsum/matrix.hpp"
#include "minorsum/rings.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace minorsum {

/// Dense polynomial over a ring, coefficients stored low-to-high. The
/// normalized form trims trailing zeros but always keeps the constant term.
template <Ring R>
struct Polynomial {
    std::vector<typename R::Elem> coeffs;

    std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

template <Ring R>
Polynomial<R> poly_constant(const R&, typename R::Elem c) {
    return Polynomial<R>{{std::move(c)}};
}

template <Ring R>
void poly_normalize(const R& ring, Polynomial<R>& p) {
    if (p.coeffs.empty()) p.coeffs.push_back(ring.zero());
    while (p.coeffs.size() > 1 && ring.is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

template <Ring R>
Polynomial<R> poly_add(const R& ring, const Polynomial<R>& a, const Polynomial<R>& b) {
    Polynomial<R> out;
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    out.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto x = i < a.coeffs.size() ? a.coeffs[i] : ring.zero();
        auto y = i < b.coeffs.size() ? b.coeffs[i] : ring.zero();
        out.coeffs.push_back(ring.add(x, y));
    }
    poly_normalize(ring, out);
    return out;
}

template <Ring R>
Polynomial<R> poly_neg(const R& ring, const Polynomial<R>& a) {
    Polynomial<R> out;
    out.coeffs.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) out.coeffs.push_back(ring.neg(c));
    poly_normalize(ring, out);
    return out;
}

template <Ring R>
Polynomial<R> poly_mul(const R& ring, const Polynomial<R>& a, const Polynomial<R>& b) {
    Polynomial<R> out;
    if (a.coeffs.empty() || b.coeffs.empty()) {
        poly_normalize(ring, out);
        return out;
    }
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (ring.is_zero(a.coeffs[i])) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] = ring.add(out.coeffs[i + j], ring.mul(a.coeffs[i], b.coeffs[j]));
    }
    // over rings with zero divisors a product can drop degree
    poly_normalize(ring, out);
    return out;
}

template <Ring R>
bool poly_eq(const R& ring, const Polynomial<R>& a, const Polynomial<R>& b) {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto x = i < a.coeffs.size() ? a.coeffs[i] : ring.zero();
        auto y = i < b.coeffs.size() ? b.coeffs[i] : ring.zero();
        if (!ring.eq(x, y)) return false;
    }
    return true;
}

/// K[x] as a ring, so the generic division-free determinant runs over
/// polynomial matrices unchanged. Internal only; never a base ring.
template <Ring R>
class PolynomialRing {
  public:
    using Elem = Polynomial<R>;

    explicit PolynomialRing(R base) : base_(std::move(base)) {}

    const R& base() const { return base_; }

    Elem zero() const { return poly_constant(base_, base_.zero()); }
    Elem one() const { return poly_constant(base_, base_.one()); }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_add(base_, a, poly_neg(base_, b)); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(base_, a, b); }
    Elem neg(const Elem& a) const { return poly_neg(base_, a); }
    bool eq(const Elem& a, const Elem& b) const { return poly_eq(base_, a, b); }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a.coeffs)
            if (!base_.is_zero(c)) return false;
        return true;
    }
    Elem from_integer(const BigInt& z) const { return poly_constant(base_, base_.from_integer(z)); }

  private:
    R base_;
};

/// Coefficients of det(xI + A), low-to-high, always length n+1 (monic).
/// The coefficient of x^{n-i} equals principal_minor_sum(A, i); the two
/// routes are independent and checked against each other.
template <Ring R>
Polynomial<R> charpoly_coeffs(const Matrix<R>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly_coeffs: matrix not square");
    const std::size_t n = a.rows();
    const R& ring = a.ring();
    PolynomialRing<R> pring(ring);
    Matrix<PolynomialRing<R>> xia(pring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial<R> entry{{a(i, j)}};
            if (i == j) entry.coeffs.push_back(ring.one());
            xia.set(i, j, std::move(entry));
        }
    Polynomial<R> det = determinant(xia);
    det.coeffs.resize(n + 1, ring.zero());
    return det;
}

}  // namespace minorsum
