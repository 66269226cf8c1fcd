#include "minorsum/sums.hpp"

#include <doctest.h>

#include "config_gen.hpp"
#include "oracles.hpp"

#include <vector>

using namespace minorsum;
using testgen::random_charpoly_config;
using testgen::random_cycle_sum_config;

namespace {

const IntegerRing kInt;

PairSumInstance inst4(int n, std::vector<int> s, std::vector<int> t, std::vector<int> u, std::vector<int> v) {
    return PairSumInstance{n, IndexSet(std::move(s), n), IndexSet(std::move(t), n), IndexSet(std::move(u), n),
                           IndexSet(std::move(v), n)};
}

}  // namespace

TEST_CASE("rank_below and sign_exponent on fixed sets") {
    const IndexSet x({1, 3, 5}, 6);
    CHECK(rank_below(1, x) == 0);
    CHECK(rank_below(3, x) == 1);
    CHECK(rank_below(5, x) == 2);
    CHECK_THROWS(rank_below(2, x));

    CHECK(sign_exponent(x, x) == 0);
    CHECK(sign_exponent(IndexSet({1, 2}, 3), IndexSet({1, 3}, 3)) == 0);
    CHECK(sign_exponent(IndexSet({2, 3}, 3), IndexSet({1, 2}, 3)) == 1);
    CHECK(sign_exponent(IndexSet({1, 2}, 3), IndexSet({2, 3}, 3)) == -1);
    CHECK_THROWS(sign_exponent(IndexSet({1}, 2), IndexSet({1}, 3)));

    // full intersection forces a trivial sign: if S = V and T = U the
    // difference sets are empty on both sides
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& s : all_subsets(n, k)) {
                CHECK(sign_exponent(s, s) == 0);
            }
        }
    }

    CHECK(intersection_size(IndexSet({1, 2}, 4), IndexSet({2, 4}, 4)) == 1);
    CHECK(intersection_size(IndexSet({}, 4), IndexSet({2, 4}, 4)) == 0);
}

TEST_CASE("pair sum closed form on frozen instances") {
    // k = n = 2: only support condition j = 2, coefficient 2! 0! = 2
    CHECK(pair_sum_closed(kInt, inst4(2, {1, 2}, {1, 2}, {1, 2}, {1, 2})) == 2);
    // the one permutation fixing {1,2} and mapping 1 to 2 contributes -1
    CHECK(pair_sum_closed(kInt, inst4(3, {1, 2}, {1, 2}, {2, 3}, {1, 3})) == -1);
    // intersections are empty on both sides, j = 0 = k - 1, sign +
    CHECK(pair_sum_closed(kInt, inst4(3, {1}, {2}, {3}, {2})) == 1);
    // j = 0 < k - 1 = 1: out of support
    CHECK(pair_sum_closed(kInt, inst4(4, {1, 2}, {1, 2}, {3, 4}, {3, 4})) == 0);
    // mismatched intersection sizes: out of support
    CHECK(pair_sum_closed(kInt, inst4(3, {1, 2}, {1, 2}, {1, 2}, {1, 3})) == 0);
    // k = 0: empty minors are one, so the sum counts all n! permutations
    CHECK(pair_sum_closed(kInt, inst4(4, {}, {}, {}, {})) == 24);

    PairSumInstance bad{0, {}, {}, {}, {}};
    CHECK_THROWS(pair_sum_closed(kInt, bad));
    CHECK_THROWS(pair_sum_closed(kInt, inst4(3, {1}, {1, 2}, {1}, {1})));
}

TEST_CASE("pair sum brute agrees with frozen values and reports witnesses") {
    const auto inst = inst4(3, {1, 2}, {1, 2}, {2, 3}, {1, 3});
    const auto res = pair_sum_brute(kInt, inst);
    CHECK(res.value == -1);
    // the only contributing permutation is (1 2), lexicographic rank 2
    REQUIRE(res.first_nonzero_rank.has_value());
    CHECK(*res.first_nonzero_rank == 2);

    const auto res0 = pair_sum_brute(kInt, inst4(4, {1, 2}, {1, 2}, {3, 4}, {3, 4}));
    CHECK(res0.value == 0);
    // individual terms are nonzero even though the sum cancels
    CHECK(res0.first_nonzero_rank.has_value());

    const auto all = pair_sum_brute(kInt, inst4(4, {}, {}, {}, {}));
    CHECK(all.value == 24);
    CHECK(*all.first_nonzero_rank == 0);
}

TEST_CASE("pair sum closed form matches exhaustive enumeration for n <= 4") {
    auto sweep = [&](auto ring) {
        for (int n = 1; n <= 4; ++n) {
            const auto table = build_perm_matrix_table(ring, n);
            for (int k = 0; k <= n; ++k) {
                const auto subs = all_subsets(n, k);
                for (const auto& s : subs)
                    for (const auto& t : subs)
                        for (const auto& u : subs)
                            for (const auto& v : subs) {
                                const PairSumInstance inst{n, s, t, u, v};
                                const auto closed = pair_sum_closed(ring, inst);
                                const auto brute = pair_sum_brute_table(ring, table, inst);
                                CHECK(ring.eq(closed, brute.value));
                            }
            }
        }
    };
    sweep(kInt);
    sweep(ModularRing(BigInt(3)));
    sweep(ModularRing(BigInt(2)));
}

TEST_CASE("pair sum symmetries hold for the closed form") {
    SplitMix64 rng(81);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = static_cast<int>(rng.range(1, 5));
        const int k = static_cast<int>(rng.range(0, n));
        const auto subs = all_subsets(n, k);
        auto pick = [&]() { return subs[static_cast<std::size_t>(rng.range(0, static_cast<long>(subs.size()) - 1))]; };
        const PairSumInstance inst{n, pick(), pick(), pick(), pick()};
        // substituting P -> P^{-1} swaps the roles of (S,T) and (U,V)
        const PairSumInstance swapped{n, inst.u, inst.v, inst.s, inst.t};
        CHECK(pair_sum_closed(kInt, inst) == pair_sum_closed(kInt, swapped));
        // substituting P -> P^T transposes both minors
        const PairSumInstance transposed{n, inst.t, inst.s, inst.v, inst.u};
        CHECK(pair_sum_closed(kInt, inst) == pair_sum_closed(kInt, transposed));
    }
}

TEST_CASE("streamed pair enumeration is independent of the worker count") {
    const auto inst = inst4(4, {1, 3}, {2, 3}, {1, 4}, {1, 2});
    const auto seq = pair_sum_brute(kInt, inst, {1, 8, 16});
    for (int jobs : {2, 3, 7}) {
        const auto par = pair_sum_brute(kInt, inst, {jobs, 8, 16});
        CHECK(par.value == seq.value);
        CHECK(par.first_nonzero_rank == seq.first_nonzero_rank);
    }
    const auto table = build_perm_matrix_table(kInt, 4);
    const auto tab = pair_sum_brute_table(kInt, table, inst);
    CHECK(tab.value == seq.value);
    CHECK(tab.first_nonzero_rank == seq.first_nonzero_rank);
}

TEST_CASE("tuple space sizes, decoding, and caps") {
    const TupleSpace space({2, 3}, 8, 16);
    CHECK(space.slots() == 2);
    CHECK(space.radix(0) == 8);    // 2! * 2^2
    CHECK(space.radix(1) == 48);   // 3! * 2^3
    CHECK(space.size() == 384);

    std::vector<std::uint64_t> digits;
    space.decode(100, digits);   // 100 = 2 * 48 + 4, big-endian digits
    REQUIRE(digits.size() == 2);
    CHECK(digits[0] == 2);
    CHECK(digits[1] == 4);

    // digit -> (perm rank, sign code): low bits are the sign code
    const auto [perm_rank, code] = space.split(0, 5);
    CHECK(perm_rank == 1);
    CHECK(code == 1);

    // round trip over the whole space
    const TupleSpace small({1, 2}, 8, 16);
    for (std::uint64_t r = 0; r < small.size(); ++r) {
        small.decode(r, digits);
        CHECK(digits[0] * small.radix(1) + digits[1] == r);
    }

    CHECK_THROWS(TupleSpace({0}, 8, 16));
    CHECK_THROWS(TupleSpace({9}, 8, 16));
    CHECK_THROWS(TupleSpace({3, 3, 3}, 8, 8));     // nine sign bits
    CHECK_NOTHROW(TupleSpace({3, 3, 3}, 8, 9));
}

TEST_CASE("slot group tables match on-demand construction") {
    const detail::SlotGroup<IntegerRing> group(kInt, 3, 48, 8);
    REQUIRE(group.tabulated());
    REQUIRE(group.table_size() == 48);
    for (std::uint64_t h = 0; h < 48; ++h) {
        const auto fresh = group.build(h);
        CHECK(group.at(h).first == fresh.first);
        CHECK(group.at(h).second == fresh.second);
        CHECK(transpose(fresh.first) == fresh.second);
    }
}

TEST_CASE("cycle matrix multiplies the shifted conjugated factors in order") {
    // one slot of size one: G A G^T = A for either sign, so M = A + D
    CycleConfig<IntegerRing> c1;
    c1.dims = {1};
    c1.a_mats = {matrix_from_ints(kInt, {{5}})};
    c1.d_mats = {matrix_from_ints(kInt, {{3}})};
    for (std::uint64_t code = 0; code < 2; ++code) {
        const auto m = cycle_matrix(kInt, c1, {Permutation::identity(1)}, {SignVector::from_code(1, code)});
        CHECK(m == matrix_from_ints(kInt, {{8}}));
    }

    // two slots with identity group elements: M = (A_0 + D_0)(A_1 + D_1)
    SplitMix64 rng(82);
    auto cfg = random_charpoly_config(kInt, rng, {2, 3});
    const std::vector<Permutation> id_perms{Permutation::identity(2), Permutation::identity(3)};
    const std::vector<SignVector> plus{SignVector::from_code(2, 0), SignVector::from_code(3, 0)};
    CHECK(cycle_matrix(kInt, cfg, id_perms, plus) == (cfg.a_mats[0] + cfg.d_mats[0]) * (cfg.a_mats[1] + cfg.d_mats[1]));

    // nontrivial group elements, checked against an explicit expansion
    const Permutation p0({2, 1});
    const Permutation p1({3, 1, 2});
    const SignVector q0({1, -1});
    const SignVector q1({-1, 1, 1});
    const auto g0 = signed_perm_matrix(kInt, q0, p0);
    const auto g1 = signed_perm_matrix(kInt, q1, p1);
    const auto expect = (g0 * cfg.a_mats[0] * transpose(g1) + cfg.d_mats[0]) * (g1 * cfg.a_mats[1] * transpose(g0) + cfg.d_mats[1]);
    CHECK(cycle_matrix(kInt, cfg, {p0, p1}, {q0, q1}) == expect);

    CHECK_THROWS(cycle_matrix(kInt, cfg, {p0}, {q0}));
    CHECK_THROWS(cycle_matrix(kInt, cfg, {p1, p0}, {q1, q0}));
}

TEST_CASE("cycle sum on frozen one-slot instances") {
    // n = 1, k = 1, scalars: sum over signs of (s a s) = 2a
    CycleConfig<IntegerRing> cfg;
    cfg.dims = {1};
    cfg.k = {1};
    cfg.a_mats = {matrix_from_ints(kInt, {{7}})};
    cfg.b_mats = {matrix_from_ints(kInt, {{1}})};
    cfg.c_mats = {matrix_from_ints(kInt, {{1}})};
    cfg.x_sets = {IndexSet({1}, 1)};
    cfg.y_sets = {IndexSet({1}, 1)};
    CHECK(cycle_sum_closed(kInt, cfg) == 14);
    const auto brute = cycle_sum_brute(kInt, cfg);
    CHECK(brute.value == 14);
    CHECK(*brute.first_nonzero_rank == 0);

    // k = 0: every term is the empty minor, so the sum counts 1! * 2^1 tuples
    cfg.k = {0};
    cfg.x_sets = {IndexSet({}, 1)};
    cfg.y_sets = {IndexSet({}, 1)};
    CHECK(cycle_sum_closed(kInt, cfg) == 2);
    CHECK(cycle_sum_brute(kInt, cfg).value == 2);
}

TEST_CASE("cycle sum on a frozen two-slot instance") {
    // all-ones A_j, identity windows, k = 1:
    //   2^4 * (1! 1! * 1)^2 * trace(A_0 A_1) = 16 * 4 = 64
    CycleConfig<IntegerRing> cfg;
    cfg.dims = {2, 2};
    cfg.k = {1, 1};
    cfg.a_mats = {matrix_from_ints(kInt, {{1, 1}, {1, 1}}), matrix_from_ints(kInt, {{1, 1}, {1, 1}})};
    cfg.b_mats = {Matrix<IntegerRing>::identity(kInt, 2), Matrix<IntegerRing>::identity(kInt, 2)};
    cfg.c_mats = {Matrix<IntegerRing>::identity(kInt, 2), Matrix<IntegerRing>::identity(kInt, 2)};
    cfg.x_sets = {IndexSet({1}, 2), IndexSet({1}, 2)};
    cfg.y_sets = {IndexSet({1}, 2), IndexSet({1}, 2)};
    CHECK(cycle_sum_closed(kInt, cfg) == 64);
    CHECK(cycle_sum_brute(kInt, cfg).value == 64);

    // mismatched minor orders: both sides of the identity vanish
    cfg.k = {1, 0};
    cfg.x_sets = {IndexSet({1}, 2), IndexSet({}, 2)};
    cfg.y_sets = {IndexSet({1}, 2), IndexSet({}, 2)};
    CHECK(kInt.is_zero(cycle_sum_closed(kInt, cfg)));
    CHECK(kInt.is_zero(cycle_sum_brute(kInt, cfg).value));
}

TEST_CASE("cycle sum closed form matches enumeration on random configurations") {
    auto sweep = [](auto ring, std::uint64_t seed) {
        SplitMix64 rng(seed);
        for (const auto& dims : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 2}, {2, 3}, {1, 1, 2}, {2, 2, 2}}) {
            for (int rep = 0; rep < 4; ++rep) {
                const auto cfg = random_cycle_sum_config(ring, rng, dims);
                const auto closed = cycle_sum_closed(ring, cfg);
                const auto brute = cycle_sum_brute(ring, cfg);
                CHECK(ring.eq(closed, brute.value));
            }
        }
    };
    sweep(kInt, 83);
    sweep(ModularRing(BigInt(5)), 84);
    sweep(ModularRing(BigInt(6)), 85);
}

TEST_CASE("mismatched minor orders annihilate random cycle sums") {
    SplitMix64 rng(86);
    for (int rep = 0; rep < 6; ++rep) {
        auto cfg = random_cycle_sum_config(kInt, rng, {2, 2});
        // force distinct orders on the two slots
        cfg.k = {1, 0};
        cfg.x_sets = {all_subsets(cfg.x_sets[0].universe(), 1)[0], IndexSet({}, cfg.x_sets[1].universe())};
        cfg.y_sets = {all_subsets(cfg.y_sets[0].universe(), 1)[0], IndexSet({}, cfg.y_sets[1].universe())};
        CHECK(kInt.is_zero(cycle_sum_closed(kInt, cfg)));
        CHECK(kInt.is_zero(cycle_sum_brute(kInt, cfg).value));
    }
}

TEST_CASE("cycle sums are invariant under signed permutation conjugation") {
    SplitMix64 rng(87);
    PermutationStream s2(2);
    SignVectorStream q2(2);
    for (int rep = 0; rep < 5; ++rep) {
        const auto cfg = random_cycle_sum_config(kInt, rng, {2, 2});
        // replace A_j by R_j A_j R_{j+1}^T; summing over the whole group
        // absorbs the change of variables G_j -> G_j R_j
        std::vector<Matrix<IntegerRing>> r_mats;
        for (int j = 0; j < 2; ++j) {
            const auto p = s2.at(static_cast<std::uint64_t>(rng.range(0, 1)));
            const auto q = q2.at(static_cast<std::uint64_t>(rng.range(0, 3)));
            r_mats.push_back(signed_perm_matrix(kInt, q, p));
        }
        auto conj = cfg;
        conj.a_mats[0] = r_mats[0] * cfg.a_mats[0] * transpose(r_mats[1]);
        conj.a_mats[1] = r_mats[1] * cfg.a_mats[1] * transpose(r_mats[0]);
        CHECK(cycle_sum_brute(kInt, conj).value == cycle_sum_brute(kInt, cfg).value);
        CHECK(cycle_sum_closed(kInt, conj) == cycle_sum_closed(kInt, cfg));
    }
}

TEST_CASE("one-slot cycle wraps around to itself") {
    // d = 1 means the single A is conjugated by the same group element on
    // both sides; the closed form then pairs B_0 C_0 with X_0, Y_0
    SplitMix64 rng(88);
    for (int rep = 0; rep < 6; ++rep) {
        const auto cfg = random_cycle_sum_config(kInt, rng, {3});
        CHECK(cycle_sum_closed(kInt, cfg) == cycle_sum_brute(kInt, cfg).value);
    }
}

TEST_CASE("cycle and charpoly sums collapse in characteristic two") {
    const ModularRing m2((BigInt(2)));
    SplitMix64 rng(89);
    for (const auto& dims : std::vector<std::vector<int>>{{2}, {1, 2}, {2, 2}}) {
        const auto cfg = random_cycle_sum_config(m2, rng, dims);
        CHECK(m2.is_zero(cycle_sum_closed(m2, cfg)));
        CHECK(m2.is_zero(cycle_sum_brute(m2, cfg).value));

        const auto ccfg = random_charpoly_config(m2, rng, dims);
        const auto closed = charpoly_sum_closed(m2, ccfg);
        const auto brute = charpoly_sum_brute(m2, ccfg);
        for (const auto& c : closed.coeffs) CHECK(m2.is_zero(c));
        for (const auto& c : brute.value.coeffs) CHECK(m2.is_zero(c));
    }
}

TEST_CASE("charpoly sum on frozen one-slot scalars") {
    CycleConfig<IntegerRing> cfg;
    cfg.dims = {1};
    cfg.a_mats = {matrix_from_ints(kInt, {{5}})};
    cfg.d_mats = {matrix_from_ints(kInt, {{3}})};
    const auto closed = charpoly_sum_closed(kInt, cfg);
    REQUIRE(closed.coeffs.size() == 2);
    CHECK(closed.coeffs[0] == 16);  // 2 (a + b)
    CHECK(closed.coeffs[1] == 2);   // 2 tuples, each monic
    const auto brute = charpoly_sum_brute(kInt, cfg);
    REQUIRE(brute.value.coeffs.size() == 2);
    CHECK(brute.value.coeffs[0] == 16);
    CHECK(brute.value.coeffs[1] == 2);
    CHECK(*brute.first_nonzero_rank == 0);
}

TEST_CASE("charpoly sum with zero matrices counts monic terms") {
    for (const auto& dims : std::vector<std::vector<int>>{{2}, {2, 1}, {1, 3}, {2, 2}}) {
        CycleConfig<IntegerRing> cfg;
        cfg.dims = dims;
        const int d = static_cast<int>(dims.size());
        for (int j = 0; j < d; ++j) {
            const auto nj = static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]);
            const auto nn = static_cast<std::size_t>(dims[static_cast<std::size_t>((j + 1) % d)]);
            cfg.a_mats.emplace_back(kInt, nj, nn);
            cfg.d_mats.emplace_back(kInt, nj, nn);
        }
        BigInt count = 1;
        long bits = 0;
        for (int n : dims) {
            count *= factorial(n);
            bits += n;
        }
        count *= pow2(bits);
        const auto n0 = static_cast<std::size_t>(dims[0]);
        const auto closed = charpoly_sum_closed(kInt, cfg);
        const auto brute = charpoly_sum_brute(kInt, cfg);
        REQUIRE(closed.coeffs.size() == n0 + 1);
        REQUIRE(brute.value.coeffs.size() == n0 + 1);
        for (std::size_t i = 0; i < n0; ++i) {
            CHECK(kInt.is_zero(closed.coeffs[i]));
            CHECK(kInt.is_zero(brute.value.coeffs[i]));
        }
        CHECK(closed.coeffs[n0] == count);
        CHECK(brute.value.coeffs[n0] == count);
    }
}

TEST_CASE("charpoly sum closed form matches enumeration on random configurations") {
    auto sweep = [](auto ring, std::uint64_t seed) {
        SplitMix64 rng(seed);
        // mixed dimensions force the rank-bottleneck guard: slots with
        // n_j < k contribute nothing and their factorial factor is skipped
        for (const auto& dims : std::vector<std::vector<int>>{{1}, {2}, {3}, {2, 1}, {1, 3}, {2, 2}, {3, 2}, {2, 1, 2}}) {
            for (int rep = 0; rep < 4; ++rep) {
                const auto cfg = random_charpoly_config(ring, rng, dims);
                const auto closed = charpoly_sum_closed(ring, cfg);
                const auto brute = charpoly_sum_brute(ring, cfg);
                REQUIRE(closed.coeffs.size() == brute.value.coeffs.size());
                for (std::size_t i = 0; i < closed.coeffs.size(); ++i)
                    CHECK(ring.eq(closed.coeffs[i], brute.value.coeffs[i]));
            }
        }
    };
    sweep(kInt, 90);
    sweep(ModularRing(BigInt(5)), 91);
    sweep(ModularRing(BigInt(7)), 92);
}

TEST_CASE("leading charpoly sum coefficient counts the group by size") {
    SplitMix64 rng(93);
    for (const auto& dims : std::vector<std::vector<int>>{{2}, {2, 3}, {1, 2}}) {
        const auto cfg = random_charpoly_config(kInt, rng, dims);
        BigInt count = 1;
        long bits = 0;
        for (int n : dims) {
            count *= factorial(n);
            bits += n;
        }
        count *= pow2(bits);
        const auto n0 = static_cast<std::size_t>(dims[0]);
        CHECK(charpoly_sum_closed(kInt, cfg).coeffs[n0] == count);
        CHECK(charpoly_sum_brute(kInt, cfg).value.coeffs[n0] == count);
    }
}

TEST_CASE("enumeration results are independent of the worker count") {
    SplitMix64 rng(94);
    const auto cfg = random_cycle_sum_config(kInt, rng, {2, 3});
    const auto seq = cycle_sum_brute(kInt, cfg, {1, 8, 16});
    for (int jobs : {2, 5}) {
        const auto par = cycle_sum_brute(kInt, cfg, {jobs, 8, 16});
        CHECK(par.value == seq.value);
        CHECK(par.first_nonzero_rank == seq.first_nonzero_rank);
    }

    const auto ccfg = random_charpoly_config(kInt, rng, {2, 2});
    const auto cseq = charpoly_sum_brute(kInt, ccfg, {1, 8, 16});
    for (int jobs : {3, 6}) {
        const auto cpar = charpoly_sum_brute(kInt, ccfg, {jobs, 8, 16});
        CHECK(poly_eq(kInt, cpar.value, cseq.value));
        CHECK(cpar.first_nonzero_rank == cseq.first_nonzero_rank);
    }
}

TEST_CASE("cycle config validation rejects malformed shapes") {
    SplitMix64 rng(95);
    auto cfg = random_cycle_sum_config(kInt, rng, {2, 2});
    CHECK_NOTHROW(cfg.validate_cycle_sum());

    auto bad = cfg;
    bad.a_mats[0] = Matrix<IntegerRing>(kInt, 3, 2);
    CHECK_THROWS(bad.validate_cycle_sum());

    bad = cfg;
    bad.k.pop_back();
    CHECK_THROWS(bad.validate_cycle_sum());

    bad = cfg;
    bad.x_sets[0] = IndexSet({}, bad.x_sets[0].universe());
    if (cfg.k[0] != 0) CHECK_THROWS(bad.validate_cycle_sum());

    CycleConfig<IntegerRing> empty;
    CHECK_THROWS(empty.validate_core());

    auto ccfg = random_charpoly_config(kInt, rng, {2, 2});
    CHECK_NOTHROW(ccfg.validate_charpoly_sum());
    ccfg.d_mats[1] = Matrix<IntegerRing>(kInt, 1, 1);
    CHECK_THROWS(ccfg.validate_charpoly_sum());
}

TEST_CASE("brute enumeration respects the configured caps") {
    CycleConfig<IntegerRing> cfg;
    cfg.dims = {3, 3, 3};
    for (int j = 0; j < 3; ++j) {
        cfg.k.push_back(0);
        cfg.a_mats.push_back(Matrix<IntegerRing>::identity(kInt, 3));
        cfg.b_mats.push_back(Matrix<IntegerRing>::identity(kInt, 3));
        cfg.c_mats.push_back(Matrix<IntegerRing>::identity(kInt, 3));
        cfg.x_sets.push_back(IndexSet({}, 3));
        cfg.y_sets.push_back(IndexSet({}, 3));
    }
    // nine sign bits against an eight-bit cap
    CHECK_THROWS(cycle_sum_brute(kInt, cfg, {1, 8, 8}));
    CHECK_NOTHROW(cycle_sum_brute(kInt, cfg, {1, 8, 9}));

    const auto inst = inst4(3, {1}, {1}, {1}, {1});
    CHECK_THROWS(pair_sum_brute(kInt, inst, {1, 2, 16}));
}
