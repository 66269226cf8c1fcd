#pragma once

#include "minorsum/groups.hpp"
#include "minorsum/index_set.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/parallel.hpp"
#include "minorsum/polynomial.hpp"
#include "minorsum/rings.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorsum {

/// Number of elements of X strictly below t; t must belong to X.
inline int rank_below(int t, const IndexSet& x) {
    if (!x.contains(t)) throw std::invalid_argument("rank_below: element not in set");
    int c = 0;
    for (int e : x.elements())
        if (e < t) ++c;
    return c;
}

/// s(X, Y): sum of ranks over X \ Y minus sum of ranks over Y \ X. This is
/// the row/column swap count that turns one aligned minor into the other,
/// so only its parity feeds a sign.
inline long sign_exponent(const IndexSet& x, const IndexSet& y) {
    if (x.universe() != y.universe()) throw std::invalid_argument("sign_exponent: universes differ");
    long s = 0;
    for (int t : x.elements())
        if (!y.contains(t)) s += rank_below(t, x);
    for (int t : y.elements())
        if (!x.contains(t)) s -= rank_below(t, y);
    return s;
}

inline int intersection_size(const IndexSet& x, const IndexSet& y) {
    int c = 0;
    for (int e : x.elements())
        if (y.contains(e)) ++c;
    return c;
}

/// One instance of the pair sum over all permutation matrices:
///   sum_P [P]_{S,T} [P^{-1}]_{U,V}
struct PairSumInstance {
    int n = 0;
    IndexSet s, t, u, v;

    void validate() const {
        if (n < 1) throw std::invalid_argument("PairSumInstance: n must be >= 1");
        const std::size_t k = s.size();
        if (t.size() != k || u.size() != k || v.size() != k)
            throw std::invalid_argument("PairSumInstance: index sets must share a common size");
        for (const IndexSet* is : {&s, &t, &u, &v})
            if (is->universe() != n)
                throw std::invalid_argument("PairSumInstance: index set universe must equal n");
    }
};

struct BruteOptions {
    int jobs = 1;
    int cap_perms = kDefaultPermCap;
    int cap_signs = kDefaultSignBitCap;
};

/// Value of an exhaustive enumeration plus the first enumeration rank whose
/// term was nonzero (localizes convention errors when a closed form
/// disagrees).
template <class E>
struct BruteResult {
    E value;
    std::optional<std::uint64_t> first_nonzero_rank;
};

/// Closed form for the pair sum: zero unless |S&V| = |T&U| >= k-1, else
///   j! (n-2k+j)! (-1)^{s(T,U)+s(S,V)}   with j = |S&V|.
/// The guard runs first; when it passes, n-2k+j >= 0 because |S u V| <= n.
template <Ring R>
typename R::Elem pair_sum_closed(const R& ring, const PairSumInstance& inst) {
    inst.validate();
    const int k = static_cast<int>(inst.s.size());
    const int j = intersection_size(inst.s, inst.v);
    if (j != intersection_size(inst.t, inst.u) || j < k - 1) return ring.zero();
    const BigInt coef = factorial(j) * factorial(inst.n - 2 * k + j);
    const long exponent = sign_exponent(inst.t, inst.u) + sign_exponent(inst.s, inst.v);
    return ring.mul(ring.from_integer(coef), sign_power(ring, exponent));
}

/// Permutation matrices and their inverses by lexicographic rank, shared
/// across the many instances of a sweep.
template <Ring R>
struct PermMatrixTable {
    int n;
    std::vector<Matrix<R>> mat, inv;
};

template <Ring R>
PermMatrixTable<R> build_perm_matrix_table(const R& ring, int n, int cap = kDefaultPermCap) {
    PermutationStream stream(n, cap);
    PermMatrixTable<R> table{n, {}, {}};
    table.mat.reserve(stream.size());
    table.inv.reserve(stream.size());
    stream.for_each_in(0, stream.size(), [&](std::uint64_t, const Permutation& p) {
        table.mat.push_back(perm_matrix(ring, p));
        table.inv.push_back(transpose(table.mat.back()));
    });
    return table;
}

template <Ring R>
BruteResult<typename R::Elem> pair_sum_brute_table(const R& ring, const PermMatrixTable<R>& table,
                                                   const PairSumInstance& inst) {
    inst.validate();
    if (inst.n != table.n) throw std::invalid_argument("pair_sum_brute_table: degree mismatch");
    BruteResult<typename R::Elem> out{ring.zero(), std::nullopt};
    for (std::uint64_t r = 0; r < table.mat.size(); ++r) {
        auto term = ring.mul(minor(table.mat[r], inst.s, inst.t), minor(table.inv[r], inst.u, inst.v));
        if (!ring.is_zero(term)) {
            if (!out.first_nonzero_rank) out.first_nonzero_rank = r;
            out.value = ring.add(out.value, term);
        }
    }
    return out;
}

/// The n!-term oracle, streamed with O(1) memory; rank ranges go to workers
/// and partial sums are combined in chunk order.
template <Ring R>
BruteResult<typename R::Elem> pair_sum_brute(const R& ring, const PairSumInstance& inst,
                                             const BruteOptions& opts = {}) {
    inst.validate();
    PermutationStream stream(inst.n, opts.cap_perms);
    const std::uint64_t total = stream.size();
    std::vector<BruteResult<typename R::Elem>> partial(chunk_count(total, opts.jobs), {ring.zero(), std::nullopt});
    parallel_chunks(total, opts.jobs, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        auto& acc = partial[c];
        stream.for_each_in(lo, hi, [&](std::uint64_t r, const Permutation& p) {
            const auto pm = perm_matrix(ring, p);
            auto term = ring.mul(minor(pm, inst.s, inst.t), minor(transpose(pm), inst.u, inst.v));
            if (!ring.is_zero(term)) {
                if (!acc.first_nonzero_rank) acc.first_nonzero_rank = r;
                acc.value = ring.add(acc.value, term);
            }
        });
    });
    BruteResult<typename R::Elem> out{ring.zero(), std::nullopt};
    for (const auto& part : partial) {
        out.value = ring.add(out.value, part.value);
        if (!out.first_nonzero_rank) out.first_nonzero_rank = part.first_nonzero_rank;
    }
    return out;
}

/// A cyclically-indexed family of matrices: A_j maps slot j+1 (mod d) to
/// slot j, with outer factors B_j, C_j and window sets X_j, Y_j for the
/// cycle minor-product sum, or additive shifts D_j for the charpoly sum.
template <Ring R>
struct CycleConfig {
    std::vector<int> dims;           // n_j
    std::vector<int> k;              // minor orders k_j (cycle sum only)
    std::vector<Matrix<R>> a_mats;   // A_j : n_j x n_{j+1 mod d}
    std::vector<Matrix<R>> b_mats;   // B_j : p_j x n_j
    std::vector<Matrix<R>> c_mats;   // C_j : n_{j+1 mod d} x r_j
    std::vector<Matrix<R>> d_mats;   // D_j : n_j x n_{j+1 mod d}
    std::vector<IndexSet> x_sets;    // X_j, k_j-subset of [p_j]
    std::vector<IndexSet> y_sets;    // Y_j, k_j-subset of [r_j]

    int cycle_length() const { return static_cast<int>(dims.size()); }
    int next(int j) const { return (j + 1) % cycle_length(); }
    int prev(int j) const { return (j + cycle_length() - 1) % cycle_length(); }

    void validate_core() const {
        const int d = cycle_length();
        if (d < 1) throw std::invalid_argument("CycleConfig: need at least one slot");
        for (int n : dims)
            if (n < 1) throw std::invalid_argument("CycleConfig: dims must be >= 1");
        if (static_cast<int>(a_mats.size()) != d) throw std::invalid_argument("CycleConfig: need d matrices A_j");
        for (int j = 0; j < d; ++j)
            if (a_mats[j].rows() != static_cast<std::size_t>(dims[j]) ||
                a_mats[j].cols() != static_cast<std::size_t>(dims[next(j)]))
                throw std::invalid_argument("CycleConfig: A_" + std::to_string(j) + " has wrong shape");
    }

    /// Shape checks for the cycle minor-product sum (B, C, X, Y present).
    void validate_cycle_sum() const {
        validate_core();
        const int d = cycle_length();
        if (static_cast<int>(b_mats.size()) != d || static_cast<int>(c_mats.size()) != d ||
            static_cast<int>(x_sets.size()) != d || static_cast<int>(y_sets.size()) != d ||
            static_cast<int>(k.size()) != d)
            throw std::invalid_argument("CycleConfig: cycle sum needs d of each of B, C, X, Y, k");
        for (int j = 0; j < d; ++j) {
            if (k[j] < 0) throw std::invalid_argument("CycleConfig: negative minor order");
            if (b_mats[j].cols() != static_cast<std::size_t>(dims[j]))
                throw std::invalid_argument("CycleConfig: B_" + std::to_string(j) + " has wrong shape");
            if (c_mats[j].rows() != static_cast<std::size_t>(dims[next(j)]))
                throw std::invalid_argument("CycleConfig: C_" + std::to_string(j) + " has wrong shape");
            if (static_cast<int>(x_sets[j].size()) != k[j] || x_sets[j].universe() != static_cast<int>(b_mats[j].rows()))
                throw std::invalid_argument("CycleConfig: X_" + std::to_string(j) + " inconsistent with k and B");
            if (static_cast<int>(y_sets[j].size()) != k[j] || y_sets[j].universe() != static_cast<int>(c_mats[j].cols()))
                throw std::invalid_argument("CycleConfig: Y_" + std::to_string(j) + " inconsistent with k and C");
            if (k[j] > dims[j] || k[j] > dims[next(j)])
                throw std::invalid_argument("CycleConfig: k_" + std::to_string(j) + " exceeds a cycle dimension");
        }
    }

    /// Shape checks for the charpoly sum (D present; B, C, X, Y unused).
    void validate_charpoly_sum() const {
        validate_core();
        const int d = cycle_length();
        if (static_cast<int>(d_mats.size()) != d)
            throw std::invalid_argument("CycleConfig: charpoly sum needs d matrices D_j");
        for (int j = 0; j < d; ++j)
            if (d_mats[j].rows() != a_mats[j].rows() || d_mats[j].cols() != a_mats[j].cols())
                throw std::invalid_argument("CycleConfig: D_" + std::to_string(j) + " has wrong shape");
    }
};

/// The tuple enumeration space for d-fold group sums. Each slot j
/// contributes a digit h_j = perm_rank * 2^{n_j} + sign_code with radix
/// n_j! * 2^{n_j}; ranks read the digits big-endian (h_0 most significant).
class TupleSpace {
  public:
    TupleSpace(const std::vector<int>& dims, int cap_perms, int cap_signs) : dims_(dims) {
        int sign_bits = 0;
        for (int n : dims_) {
            if (n < 1) throw std::invalid_argument("TupleSpace: dims must be >= 1");
            if (n > cap_perms)
                throw std::invalid_argument("TupleSpace: degree " + std::to_string(n) +
                                            " exceeds permutation cap " + std::to_string(cap_perms));
            sign_bits += n;
        }
        if (sign_bits > cap_signs)
            throw std::invalid_argument("TupleSpace: " + std::to_string(sign_bits) +
                                        " total sign bits exceed cap " + std::to_string(cap_signs));
        radix_.reserve(dims_.size());
        size_ = 1;
        for (int n : dims_) {
            const std::uint64_t m = factorial_u64(n) << n;
            radix_.push_back(m);
            size_ *= m;
        }
    }

    std::size_t slots() const { return dims_.size(); }
    std::uint64_t size() const { return size_; }
    std::uint64_t radix(std::size_t j) const { return radix_[j]; }

    void decode(std::uint64_t rank, std::vector<std::uint64_t>& digits) const {
        digits.resize(radix_.size());
        for (std::size_t j = radix_.size(); j-- > 0;) {
            digits[j] = rank % radix_[j];
            rank /= radix_[j];
        }
    }

    /// digit -> (permutation lex rank, sign code) for slot j.
    std::pair<std::uint64_t, std::uint64_t> split(std::size_t j, std::uint64_t digit) const {
        const auto bits = static_cast<unsigned>(dims_[j]);
        return {digit >> bits, digit & ((std::uint64_t{1} << bits) - 1)};
    }

  private:
    std::vector<int> dims_;
    std::vector<std::uint64_t> radix_;
    std::uint64_t size_ = 1;
};

namespace detail {

// Signed permutation matrices (and transposes) for one slot, materialized
// when the group is small enough and rebuilt from the digit otherwise.
template <Ring R>
class SlotGroup {
  public:
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 17;

    SlotGroup(const R& ring, int n, std::uint64_t radix, int cap_perms) : ring_(ring), n_(n), stream_(n, cap_perms) {
        if (radix <= kTableLimit) {
            table_.reserve(radix);
            for (std::uint64_t h = 0; h < radix; ++h) table_.push_back(build(h));
        }
    }

    bool tabulated() const { return !table_.empty(); }
    std::uint64_t table_size() const { return table_.size(); }

    std::pair<Matrix<R>, Matrix<R>> build(std::uint64_t digit) const {
        const auto bits = static_cast<unsigned>(n_);
        const std::uint64_t perm_rank = digit >> bits;
        const std::uint64_t code = digit & ((std::uint64_t{1} << bits) - 1);
        auto g = signed_perm_matrix(ring_, SignVector::from_code(n_, code), stream_.at(perm_rank));
        auto gt = transpose(g);
        return {std::move(g), std::move(gt)};
    }

    const std::pair<Matrix<R>, Matrix<R>>& at(std::uint64_t digit) const { return table_[digit]; }

    std::pair<Matrix<R>, Matrix<R>> get(std::uint64_t digit) const {
        return tabulated() ? table_[digit] : build(digit);
    }

  private:
    R ring_;
    int n_;
    PermutationStream stream_;
    std::vector<std::pair<Matrix<R>, Matrix<R>>> table_;
};

template <Ring R>
Matrix<R> select_rows(const Matrix<R>& m, const IndexSet& rows) {
    Matrix<R> out(m.ring(), rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.set(i, j, m(static_cast<std::size_t>(rows.elements()[i]) - 1, j));
    return out;
}

template <Ring R>
Matrix<R> select_cols(const Matrix<R>& m, const IndexSet& cols) {
    Matrix<R> out(m.ring(), m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.set(i, j, m(i, static_cast<std::size_t>(cols.elements()[j]) - 1));
    return out;
}

}  // namespace detail

/// M(P, Q) = prod_j (Q_j P_j A_j (Q_{j+1 mod d} P_{j+1 mod d})^{-1} + D_j);
/// the inverse of a signed permutation matrix is its transpose.
template <Ring R>
Matrix<R> cycle_matrix(const R& ring, const CycleConfig<R>& cfg, const std::vector<Permutation>& perms,
                       const std::vector<SignVector>& signs) {
    cfg.validate_charpoly_sum();
    const int d = cfg.cycle_length();
    if (static_cast<int>(perms.size()) != d || static_cast<int>(signs.size()) != d)
        throw std::invalid_argument("cycle_matrix: need d permutations and d sign vectors");
    std::vector<Matrix<R>> g;
    g.reserve(perms.size());
    for (int j = 0; j < d; ++j) {
        if (perms[static_cast<std::size_t>(j)].degree() != cfg.dims[static_cast<std::size_t>(j)] ||
            signs[static_cast<std::size_t>(j)].size() != cfg.dims[static_cast<std::size_t>(j)])
            throw std::invalid_argument("cycle_matrix: group element degree mismatch at slot " + std::to_string(j));
        g.push_back(signed_perm_matrix(ring, signs[static_cast<std::size_t>(j)], perms[static_cast<std::size_t>(j)]));
    }
    std::optional<Matrix<R>> acc;
    for (int j = 0; j < d; ++j) {
        auto factor = g[static_cast<std::size_t>(j)] * cfg.a_mats[static_cast<std::size_t>(j)] *
                          transpose(g[static_cast<std::size_t>(cfg.next(j))]) +
                      cfg.d_mats[static_cast<std::size_t>(j)];
        acc = acc ? *acc * factor : std::move(factor);
    }
    return *acc;
}

/// Closed form of the cycle minor-product sum: zero unless all k_j agree,
/// otherwise
///   2^{sum n_j} * prod_j k! (n_j-k)! [B_j C_{j-1}]_{X_j, Y_{j-1}}
///     * [prod_j A_j]^{(k)}.
template <Ring R>
typename R::Elem cycle_sum_closed(const R& ring, const CycleConfig<R>& cfg) {
    cfg.validate_cycle_sum();
    const int d = cfg.cycle_length();
    const int kk = cfg.k[0];
    for (int kj : cfg.k)
        if (kj != kk) return ring.zero();
    long dim_sum = 0;
    for (int n : cfg.dims) dim_sum += n;
    auto acc = two_pow(ring, dim_sum);
    for (int j = 0; j < d; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const auto pu = static_cast<std::size_t>(cfg.prev(j));
        acc = ring.mul(acc, ring.from_integer(factorial(kk) * factorial(cfg.dims[ju] - kk)));
        acc = ring.mul(acc, minor(cfg.b_mats[ju] * cfg.c_mats[pu], cfg.x_sets[ju], cfg.y_sets[pu]));
    }
    std::optional<Matrix<R>> prod_a;
    for (const auto& a : cfg.a_mats) prod_a = prod_a ? *prod_a * a : a;
    return ring.mul(acc, principal_minor_sum(*prod_a, kk));
}

/// Exhaustive oracle for the cycle minor-product sum: enumerates every
/// d-tuple of signed permutation matrices and sums
///   prod_j [B_j G_j A_j G_{j+1}^T C_j]_{X_j, Y_j}.
/// Minors that depend only on one cycle edge are memoized when the slot
/// groups are small; the enumeration itself is never truncated.
template <Ring R>
BruteResult<typename R::Elem> cycle_sum_brute(const R& ring, const CycleConfig<R>& cfg,
                                              const BruteOptions& opts = {}) {
    cfg.validate_cycle_sum();
    const int d = cfg.cycle_length();
    const TupleSpace space(cfg.dims, opts.cap_perms, opts.cap_signs);

    std::vector<detail::SlotGroup<R>> groups;
    groups.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        groups.emplace_back(ring, cfg.dims[static_cast<std::size_t>(j)], space.radix(static_cast<std::size_t>(j)), opts.cap_perms);

    // left_j[h]  = rows(B_j at X_j) * G_h * A_j           (k_j x n_{j+1})
    // right_j[h] = G_h^T * cols(C_{j-1} at Y_{j-1})       (n_j  x k_{j-1})
    // so the edge-j factor is det(left_j[h_j] * right_{j+1}[h_{j+1}]).
    std::vector<std::vector<Matrix<R>>> left(static_cast<std::size_t>(d)), right(static_cast<std::size_t>(d));
    bool all_tabulated = true;
    for (int j = 0; j < d; ++j) all_tabulated = all_tabulated && groups[static_cast<std::size_t>(j)].tabulated();
    if (all_tabulated) {
        for (int j = 0; j < d; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto pu = static_cast<std::size_t>(cfg.prev(j));
            const auto b_sel = detail::select_rows(cfg.b_mats[ju], cfg.x_sets[ju]);
            const auto c_sel = detail::select_cols(cfg.c_mats[pu], cfg.y_sets[pu]);
            left[ju].reserve(groups[ju].table_size());
            right[ju].reserve(groups[ju].table_size());
            for (std::uint64_t h = 0; h < groups[ju].table_size(); ++h) {
                const auto& [g, gt] = groups[ju].at(h);
                left[ju].push_back(b_sel * g * cfg.a_mats[ju]);
                right[ju].push_back(gt * c_sel);
            }
        }
    }

    // edge_j[h * m_{j+1} + h'] when even the pairwise tables fit; for d = 1
    // only the diagonal would ever be read, so skip the fill
    constexpr std::uint64_t kEdgeLimit = std::uint64_t{1} << 22;
    std::vector<std::vector<typename R::Elem>> edge(static_cast<std::size_t>(d));
    bool edges_memoized = all_tabulated && d >= 2;
    for (int j = 0; j < d && edges_memoized; ++j)
        edges_memoized = space.radix(static_cast<std::size_t>(j)) * space.radix(static_cast<std::size_t>(cfg.next(j))) <= kEdgeLimit;
    if (edges_memoized) {
        for (int j = 0; j < d; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto nu = static_cast<std::size_t>(cfg.next(j));
            edge[ju].reserve(space.radix(ju) * space.radix(nu));
            for (std::uint64_t h = 0; h < space.radix(ju); ++h)
                for (std::uint64_t h2 = 0; h2 < space.radix(nu); ++h2)
                    edge[ju].push_back(determinant(left[ju][h] * right[nu][h2]));
        }
    }

    auto term_at = [&](const std::vector<std::uint64_t>& digits) -> typename R::Elem {
        auto prod = ring.one();
        for (int j = 0; j < d; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto nu = static_cast<std::size_t>(cfg.next(j));
            typename R::Elem factor = ring.zero();
            if (edges_memoized) {
                factor = edge[ju][digits[ju] * space.radix(nu) + digits[nu]];
            } else if (all_tabulated) {
                factor = determinant(left[ju][digits[ju]] * right[nu][digits[nu]]);
            } else {
                const auto gj = groups[ju].get(digits[ju]);
                const auto gn = groups[nu].get(digits[nu]);
                const auto product = cfg.b_mats[ju] * gj.first * cfg.a_mats[ju] * gn.second * cfg.c_mats[ju];
                factor = minor(product, cfg.x_sets[ju], cfg.y_sets[ju]);
            }
            if (ring.is_zero(factor)) return ring.zero();
            prod = ring.mul(prod, factor);
        }
        return prod;
    };

    const std::uint64_t total = space.size();
    std::vector<BruteResult<typename R::Elem>> partial(chunk_count(total, opts.jobs), {ring.zero(), std::nullopt});
    parallel_chunks(total, opts.jobs, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        auto& acc = partial[c];
        std::vector<std::uint64_t> digits;
        for (std::uint64_t r = lo; r < hi; ++r) {
            space.decode(r, digits);
            auto term = term_at(digits);
            if (!ring.is_zero(term)) {
                if (!acc.first_nonzero_rank) acc.first_nonzero_rank = r;
                acc.value = ring.add(acc.value, term);
            }
        }
    });
    BruteResult<typename R::Elem> out{ring.zero(), std::nullopt};
    for (const auto& part : partial) {
        out.value = ring.add(out.value, part.value);
        if (!out.first_nonzero_rank) out.first_nonzero_rank = part.first_nonzero_rank;
    }
    return out;
}

namespace detail {

// Per-slot integer coefficient of the charpoly-sum convolution:
//   (n_j - k + i)! (n_j - i)! / (n_j - k)!
// computed as falling_factorial(n_j-k+i, i) * (n_j - i)! so no division
// happens and the factor is exactly zero when n_j < k can contribute.
inline BigInt charpoly_slot_coefficient(int n_j, int k, int i) {
    return falling_factorial(n_j - k + i, i) * factorial(n_j - i);
}

}  // namespace detail

/// Closed form for the summed characteristic polynomial, in the x^{n_0-k}
/// coefficient convention:
///   r_k = 2^{sum n_j} * sum_{i=0}^{k} (prod_j (n_j-k+i)!(n_j-i)!/(n_j-k)!)
///         p_i q_{k-i}
/// where p, q are the charpoly coefficients of prod A_j and prod D_j. Terms
/// with i > n_j or k-i > n_j for some slot are skipped: the matching p_i or
/// q_{k-i} vanishes because the product factors through K^{n_j}, and the
/// factorials would be malformed.
template <Ring R>
Polynomial<R> charpoly_sum_closed(const R& ring, const CycleConfig<R>& cfg) {
    cfg.validate_charpoly_sum();
    const int n0 = cfg.dims[0];
    long dim_sum = 0;
    for (int n : cfg.dims) dim_sum += n;

    std::optional<Matrix<R>> prod_a, prod_d;
    for (const auto& m : cfg.a_mats) prod_a = prod_a ? *prod_a * m : m;
    for (const auto& m : cfg.d_mats) prod_d = prod_d ? *prod_d * m : m;
    const Polynomial<R> pa = charpoly_coeffs(*prod_a);  // length n0+1, low-to-high
    const Polynomial<R> pd = charpoly_coeffs(*prod_d);
    const auto p_at = [&](int i) { return pa.coeffs[static_cast<std::size_t>(n0 - i)]; };
    const auto q_at = [&](int i) { return pd.coeffs[static_cast<std::size_t>(n0 - i)]; };

    const auto scale = two_pow(ring, dim_sum);
    Polynomial<R> out;
    out.coeffs.assign(static_cast<std::size_t>(n0) + 1, ring.zero());
    for (int kk = 0; kk <= n0; ++kk) {
        auto r_k = ring.zero();
        for (int i = 0; i <= kk; ++i) {
            bool degenerate = false;
            for (int n : cfg.dims) degenerate = degenerate || i > n || kk - i > n;
            if (degenerate) continue;
            BigInt coef = 1;
            for (int n : cfg.dims) coef *= detail::charpoly_slot_coefficient(n, kk, i);
            auto term = ring.mul(ring.from_integer(coef), ring.mul(p_at(i), q_at(kk - i)));
            r_k = ring.add(r_k, term);
        }
        out.coeffs[static_cast<std::size_t>(n0 - kk)] = ring.mul(scale, r_k);
    }
    return out;
}

/// Exhaustive oracle: coefficient-wise sum of det(xI + M(P,Q)) over every
/// tuple. Each term is monic, so the first nonzero witness is rank 0.
template <Ring R>
BruteResult<Polynomial<R>> charpoly_sum_brute(const R& ring, const CycleConfig<R>& cfg,
                                              const BruteOptions& opts = {}) {
    cfg.validate_charpoly_sum();
    const int d = cfg.cycle_length();
    const int n0 = cfg.dims[0];
    const TupleSpace space(cfg.dims, opts.cap_perms, opts.cap_signs);

    std::vector<detail::SlotGroup<R>> groups;
    groups.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        groups.emplace_back(ring, cfg.dims[static_cast<std::size_t>(j)], space.radix(static_cast<std::size_t>(j)), opts.cap_perms);

    // factor_j[h * m_{j+1} + h'] = G_h A_j G_{h'}^T + D_j; entries are whole
    // matrices, hence the tighter limit, and d = 1 reads only the diagonal
    constexpr std::uint64_t kEdgeLimit = std::uint64_t{1} << 16;
    std::vector<std::vector<Matrix<R>>> factor(static_cast<std::size_t>(d));
    bool memoized = d >= 2;
    for (int j = 0; j < d && memoized; ++j)
        memoized = groups[static_cast<std::size_t>(j)].tabulated() && groups[static_cast<std::size_t>(cfg.next(j))].tabulated() &&
                   space.radix(static_cast<std::size_t>(j)) * space.radix(static_cast<std::size_t>(cfg.next(j))) <= kEdgeLimit;
    if (memoized) {
        for (int j = 0; j < d; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto nu = static_cast<std::size_t>(cfg.next(j));
            factor[ju].reserve(space.radix(ju) * space.radix(nu));
            for (std::uint64_t h = 0; h < space.radix(ju); ++h)
                for (std::uint64_t h2 = 0; h2 < space.radix(nu); ++h2)
                    factor[ju].push_back(groups[ju].at(h).first * cfg.a_mats[ju] * groups[nu].at(h2).second + cfg.d_mats[ju]);
        }
    }

    auto matrix_at = [&](const std::vector<std::uint64_t>& digits) -> Matrix<R> {
        std::optional<Matrix<R>> acc;
        for (int j = 0; j < d; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto nu = static_cast<std::size_t>(cfg.next(j));
            if (memoized) {
                const auto& f = factor[ju][digits[ju] * space.radix(nu) + digits[nu]];
                acc = acc ? *acc * f : f;
            } else {
                auto f = groups[ju].get(digits[ju]).first * cfg.a_mats[ju] * groups[nu].get(digits[nu]).second + cfg.d_mats[ju];
                acc = acc ? *acc * f : std::move(f);
            }
        }
        return *acc;
    };

    const std::uint64_t total = space.size();
    Polynomial<R> zero_poly;
    zero_poly.coeffs.assign(static_cast<std::size_t>(n0) + 1, ring.zero());
    std::vector<BruteResult<Polynomial<R>>> partial(chunk_count(total, opts.jobs), {zero_poly, std::nullopt});
    parallel_chunks(total, opts.jobs, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        auto& acc = partial[c];
        std::vector<std::uint64_t> digits;
        for (std::uint64_t r = lo; r < hi; ++r) {
            space.decode(r, digits);
            const Polynomial<R> term = charpoly_coeffs(matrix_at(digits));
            bool nonzero = false;
            for (std::size_t i = 0; i < acc.value.coeffs.size(); ++i) {
                acc.value.coeffs[i] = ring.add(acc.value.coeffs[i], term.coeffs[i]);
                nonzero = nonzero || !ring.is_zero(term.coeffs[i]);
            }
            if (nonzero && !acc.first_nonzero_rank) acc.first_nonzero_rank = r;
        }
    });
    BruteResult<Polynomial<R>> out{zero_poly, std::nullopt};
    for (const auto& part : partial) {
        for (std::size_t i = 0; i < out.value.coeffs.size(); ++i)
            out.value.coeffs[i] = ring.add(out.value.coeffs[i], part.value.coeffs[i]);
        if (!out.first_nonzero_rank) out.first_nonzero_rank = part.first_nonzero_rank;
    }
    return out;
}

}  // namespace minorsum
