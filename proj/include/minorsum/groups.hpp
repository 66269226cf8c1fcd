#pragma once

#include "minorsum/matrix.hpp"
#include "minorsum/rings.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorsum {

// Enumeration budgets. Group sums grow like n! * 2^n; anything over these
// caps fails loudly instead of hanging.
inline constexpr int kDefaultPermCap = 8;
inline constexpr int kDefaultSignBitCap = 16;

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t acc = 1;
    for (int i = 2; i <= n; ++i) acc *= static_cast<std::uint64_t>(i);
    return acc;
}

/// A permutation of [n], stored as 1-based images: position i holds pi(i).
class Permutation {
  public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("Permutation: images are not a bijection on [n]");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>(image(i)) - 1] = i;
        return Permutation(std::move(inv));
    }

    /// +1 or -1, by inversion count; equals the determinant of the matrix.
    int sign() const {
        int inversions = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_;
};

/// The n! permutations of [n] in lexicographic order of image lists.
/// Random access by rank (factorial number system) lets brute-force sums be
/// split into independent rank ranges.
class PermutationStream {
  public:
    explicit PermutationStream(int n, int cap = kDefaultPermCap) : n_(n) {
        if (n < 1) throw std::invalid_argument("PermutationStream: degree must be >= 1");
        if (n > cap)
            throw std::invalid_argument("PermutationStream: degree " + std::to_string(n) +
                                        " exceeds enumeration cap " + std::to_string(cap));
    }

    int degree() const { return n_; }
    std::uint64_t size() const { return factorial_u64(n_); }

    Permutation at(std::uint64_t rank) const {
        if (rank >= size()) throw std::invalid_argument("PermutationStream: rank out of range");
        std::vector<int> pool(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n_));
        std::uint64_t radix = size();
        for (int i = 0; i < n_; ++i) {
            radix /= static_cast<std::uint64_t>(n_ - i);
            const auto digit = static_cast<std::size_t>(rank / radix);
            rank %= radix;
            out.push_back(pool[digit]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
        }
        return Permutation(std::move(out));
    }

    /// Applies fn(rank, perm) for every rank in [lo, hi).
    template <class F>
    void for_each_in(std::uint64_t lo, std::uint64_t hi, F&& fn) const {
        if (lo >= hi) return;
        std::vector<int> im = at(lo).images();
        for (std::uint64_t r = lo; r < hi; ++r) {
            fn(r, Permutation(im));
            std::next_permutation(im.begin(), im.end());
        }
    }

  private:
    int n_;
};

/// A diagonal of +1/-1 entries.
class SignVector {
  public:
    explicit SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("SignVector: entries must be +1 or -1");
    }

    /// Bit i-1 of code drives entry i: bit 0 means +1.
    static SignVector from_code(int n, std::uint64_t code) {
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (code >> i) & 1 ? -1 : 1;
        return SignVector(std::move(s));
    }

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(int i) const { return signs_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& signs() const { return signs_; }

    friend bool operator==(const SignVector&, const SignVector&) = default;

  private:
    std::vector<int> signs_;
};

/// The 2^n sign vectors in binary counting order.
class SignVectorStream {
  public:
    explicit SignVectorStream(int n, int cap = kDefaultSignBitCap) : n_(n) {
        if (n < 1) throw std::invalid_argument("SignVectorStream: length must be >= 1");
        if (n > cap)
            throw std::invalid_argument("SignVectorStream: " + std::to_string(n) +
                                        " sign bits exceed enumeration cap " + std::to_string(cap));
    }

    int length() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }

    SignVector at(std::uint64_t code) const {
        if (code >= size()) throw std::invalid_argument("SignVectorStream: rank out of range");
        return SignVector::from_code(n_, code);
    }

  private:
    int n_;
};

/// Matrix of pi with entry (i, pi(i)) = one. Under this convention
/// minor(P, U, V) is nonzero exactly when pi(U) = V.
template <Ring R>
Matrix<R> perm_matrix(const R& ring, const Permutation& p) {
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix<R> m(ring, n, n);
    for (int i = 1; i <= p.degree(); ++i)
        m.set(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(p.image(i)) - 1, ring.one());
    return m;
}

/// Matrix of pi^{-1}; equals the transpose of perm_matrix(pi).
template <Ring R>
Matrix<R> inverse_matrix(const R& ring, const Permutation& p) {
    return perm_matrix(ring, p.inverse());
}

template <Ring R>
Matrix<R> sign_matrix(const R& ring, const SignVector& q) {
    const auto n = static_cast<std::size_t>(q.size());
    Matrix<R> m(ring, n, n);
    for (int i = 1; i <= q.size(); ++i) {
        auto v = q.sign(i) == 1 ? ring.one() : ring.neg(ring.one());
        m.set(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(i) - 1, std::move(v));
    }
    return m;
}

/// Q * P for Q = diag(signs), P = perm_matrix(p): entry (i, pi(i)) = q_i.
/// Signed permutation matrices are orthogonal over any ring: the inverse is
/// the transpose.
template <Ring R>
Matrix<R> signed_perm_matrix(const R& ring, const SignVector& q, const Permutation& p) {
    if (q.size() != p.degree()) throw std::invalid_argument("signed_perm_matrix: size mismatch");
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix<R> m(ring, n, n);
    for (int i = 1; i <= p.degree(); ++i) {
        auto v = q.sign(i) == 1 ? ring.one() : ring.neg(ring.one());
        m.set(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(p.image(i)) - 1, std::move(v));
    }
    return m;
}

}  // namespace minorsum
