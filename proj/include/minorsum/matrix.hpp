#pragma once

#include "minorsum/index_set.hpp"
#include "minorsum/rings.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minorsum {

/// Dense row-major matrix over a ring context R. Rectangular; immutable in
/// spirit (mutation only through set() during construction code).
template <Ring R>
class Matrix {
  public:
    using Elem = typename R::Elem;

    Matrix(R ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_.zero()) {}

    static Matrix identity(R ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.ring().one());
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, Elem v) { a_[i * cols_ + j] = std::move(v); }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!x.ring_.eq(x.a_[i], y.a_[i])) return false;
        return true;
    }

  private:
    R ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Builds a matrix from row-major integer entries via the Z -> K embedding.
template <Ring R>
Matrix<R> matrix_from_ints(const R& ring, const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix_from_ints: no rows");
    const std::size_t c = rows.front().size();
    Matrix<R> m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix_from_ints: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, ring.from_integer(BigInt(rows[i][j])));
    }
    return m;
}

template <Ring R>
Matrix<R> operator+(const Matrix<R>& x, const Matrix<R>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix add: shape mismatch");
    Matrix<R> out(x.ring(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, x.ring().add(x(i, j), y(i, j)));
    return out;
}

template <Ring R>
Matrix<R> operator*(const Matrix<R>& x, const Matrix<R>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix mul: inner dimension mismatch");
    const R& ring = x.ring();
    Matrix<R> out(ring, x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (ring.is_zero(x(i, k))) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (ring.is_zero(y(k, j))) continue;
                out.set(i, j, ring.add(out(i, j), ring.mul(x(i, k), y(k, j))));
            }
        }
    return out;
}

template <Ring R>
Matrix<R> transpose(const Matrix<R>& x) {
    Matrix<R> out(x.ring(), x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out.set(j, i, x(i, j));
    return out;
}

namespace detail {

// Laplace expansion row by row with a used-column bitmask. Zero entries are
// skipped before recursing, which makes minors of permutation-like matrices
// cost O(n^2) instead of O(n!).
template <Ring R>
typename R::Elem det_cofactor(const Matrix<R>& a, std::size_t row, std::uint32_t used) {
    const R& ring = a.ring();
    const std::size_t n = a.rows();
    if (row == n) return ring.one();
    typename R::Elem acc = ring.zero();
    int parity = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        if (!ring.is_zero(a(row, c))) {
            auto term = ring.mul(a(row, c), det_cofactor(a, row + 1, used | (1u << c)));
            acc = (parity % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        ++parity;
    }
    return acc;
}

// Division-free O(n^4) determinant: iterate X <- mu(X) * A where mu keeps
// the strict upper triangle and replaces the diagonal with negated partial
// trailing traces; after n-1 steps det = (-1)^{n-1} X(0,0).
template <Ring R>
typename R::Elem det_bird(const Matrix<R>& a) {
    const R& ring = a.ring();
    const std::size_t n = a.rows();
    Matrix<R> x = a;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        Matrix<R> mu(ring, n, n);
        typename R::Elem trail = ring.zero();
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) mu.set(i, j, x(i, j));
            mu.set(i, i, ring.neg(trail));
            trail = ring.add(trail, x(i, i));
        }
        x = mu * a;
    }
    auto d = x(0, 0);
    return (n % 2 == 1) ? d : ring.neg(d);
}

}  // namespace detail

/// Determinant over any commutative ring, computed without division.
/// det of the 0x0 matrix is one.
template <Ring R>
typename R::Elem determinant(const Matrix<R>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return a.ring().one();
    if (n <= 5) return detail::det_cofactor(a, 0, 0);
    return detail::det_bird(a);
}

/// [A]_{S,T}: determinant of the submatrix with rows S and columns T, both
/// taken in ascending order. [A]_{empty,empty} = one.
template <Ring R>
typename R::Elem minor(const Matrix<R>& a, const IndexSet& s, const IndexSet& t) {
    if (s.size() != t.size()) throw std::invalid_argument("minor: |S| != |T|");
    const std::size_t k = s.size();
    for (int e : s.elements())
        if (static_cast<std::size_t>(e) > a.rows()) throw std::invalid_argument("minor: row index out of range");
    for (int e : t.elements())
        if (static_cast<std::size_t>(e) > a.cols()) throw std::invalid_argument("minor: column index out of range");
    Matrix<R> sub(a.ring(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sub.set(i, j, a(static_cast<std::size_t>(s.elements()[i]) - 1, static_cast<std::size_t>(t.elements()[j]) - 1));
    return determinant(sub);
}

/// Sum_U [A]_{S,U} [B]_{U,T} over all k-subsets U of [cols(A)]. Agrees with
/// minor(A*B, S, T); both sides are exercised against each other in tests.
template <Ring R>
typename R::Elem minor_of_product(const Matrix<R>& a, const Matrix<R>& b, const IndexSet& s, const IndexSet& t) {
    if (a.cols() != b.rows()) throw std::invalid_argument("minor_of_product: inner dimension mismatch");
    if (s.size() != t.size()) throw std::invalid_argument("minor_of_product: |S| != |T|");
    const std::size_t k = s.size();
    if (k > a.cols()) throw std::invalid_argument("minor_of_product: k exceeds inner dimension");
    const R& ring = a.ring();
    typename R::Elem acc = ring.zero();
    for (const IndexSet& u : all_subsets(static_cast<int>(a.cols()), static_cast<int>(k)))
        acc = ring.add(acc, ring.mul(minor(a, s, u), minor(b, u, t)));
    return acc;
}

/// k-th compound: the C(rows,k) x C(cols,k) matrix of all k x k minors,
/// rows and columns indexed by k-subsets in lexicographic order.
template <Ring R>
Matrix<R> compound(const Matrix<R>& a, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > a.rows() || static_cast<std::size_t>(k) > a.cols())
        throw std::invalid_argument("compound: order out of range");
    const auto row_sets = all_subsets(static_cast<int>(a.rows()), k);
    const auto col_sets = all_subsets(static_cast<int>(a.cols()), k);
    Matrix<R> out(a.ring(), row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j) out.set(i, j, minor(a, row_sets[i], col_sets[j]));
    return out;
}

/// [A]^{(k)}: the sum of all principal k x k minors; [A]^{(0)} = one.
template <Ring R>
typename R::Elem principal_minor_sum(const Matrix<R>& a, int k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("principal_minor_sum: matrix not square");
    if (k < 0 || static_cast<std::size_t>(k) > a.rows())
        throw std::invalid_argument("principal_minor_sum: order out of range");
    const R& ring = a.ring();
    typename R::Elem acc = ring.zero();
    for (const IndexSet& s : all_subsets(static_cast<int>(a.rows()), k)) acc = ring.add(acc, minor(a, s, s));
    return acc;
}

/// Expands minor(A+D, S, T) without forming A+D:
///   sum over i and position sets U, V in C([k], i) of
///   (-1)^{sum(U)+sum(V)} [A]_{U(S),V(T)} [D]_{U~(S),V~(T)}
/// where U(S) picks elements of S at positions U and U~ is the complement.
template <Ring R>
typename R::Elem minor_of_sum_expansion(const Matrix<R>& a, const Matrix<R>& d, const IndexSet& s, const IndexSet& t) {
    if (a.rows() != d.rows() || a.cols() != d.cols())
        throw std::invalid_argument("minor_of_sum_expansion: shape mismatch");
    if (s.size() != t.size()) throw std::invalid_argument("minor_of_sum_expansion: |S| != |T|");
    const int k = static_cast<int>(s.size());
    const R& ring = a.ring();
    typename R::Elem acc = ring.zero();
    for (int i = 0; i <= k; ++i) {
        const auto position_sets = all_subsets(k, i);
        for (const IndexSet& u : position_sets) {
            const IndexSet rows_a = s.select(u);
            const IndexSet rows_d = s.select(u.complement());
            for (const IndexSet& v : position_sets) {
                auto prod = ring.mul(minor(a, rows_a, t.select(v)), minor(d, rows_d, t.select(v.complement())));
                auto term = ring.mul(sign_power(ring, u.element_sum() + v.element_sum()), prod);
                acc = ring.add(acc, term);
            }
        }
    }
    return acc;
}

}  // namespace minorsum
