#pragma once

// Test-only oracles, kept deliberately independent of the library's
// algorithms so agreement is evidence rather than tautology.

#include "minorsum/integers.hpp"
#include "minorsum/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

// Leibniz determinant: sum over all permutations of sign(p) * prod a(i, p(i)).
// Uses std::next_permutation and an inversion-count sign, neither of which
// appears in the library's cofactor or division-free paths.
template <minorsum::Ring R>
typename R::Elem leibniz_det(const minorsum::Matrix<R>& a) {
    const R& ring = a.ring();
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("leibniz_det: matrix must be square");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return ring.one();
    }
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    auto acc = ring.zero();
    do {
        long inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (image[i] > image[j]) {
                    ++inversions;
                }
            }
        }
        auto term = inversions % 2 == 0 ? ring.one() : ring.neg(ring.one());
        for (std::size_t i = 0; i < n; ++i) {
            term = ring.mul(term, a(i, image[i]));
        }
        acc = ring.add(acc, term);
    } while (std::next_permutation(image.begin(), image.end()));
    return acc;
}

// Minor via the Leibniz oracle on an explicitly copied submatrix.
template <minorsum::Ring R>
typename R::Elem leibniz_minor(const minorsum::Matrix<R>& a,
                               const minorsum::IndexSet& rows,
                               const minorsum::IndexSet& cols) {
    if (rows.size() != cols.size()) {
        throw std::invalid_argument("leibniz_minor: index sets must match in size");
    }
    const R& ring = a.ring();
    minorsum::Matrix<R> sub(ring, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            sub.set(i, j, a(static_cast<std::size_t>(rows.elements()[i]) - 1,
                            static_cast<std::size_t>(cols.elements()[j]) - 1));
        }
    }
    return leibniz_det(sub);
}

// Uniformly staged small-entry random matrix, same entries for every ring
// when driven from the same generator state.
template <minorsum::Ring R>
minorsum::Matrix<R> random_matrix(const R& ring, minorsum::SplitMix64& rng,
                                  std::size_t rows, std::size_t cols,
                                  long lo = -4, long hi = 4) {
    minorsum::Matrix<R> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, ring.from_integer(minorsum::BigInt(rng.range(lo, hi))));
        }
    }
    return m;
}

}  // namespace oracle
