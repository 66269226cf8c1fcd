#include "minorsum/verify.hpp"

#include "minorsum/json_io.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/parallel.hpp"
#include "minorsum/polynomial.hpp"
#include "minorsum/sums.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <variant>

namespace minorsum {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json rings_to_json(const std::vector<RingSpec>& rings) {
    Json arr = Json::array();
    for (const auto& spec : rings) arr.push_back(ring_spec_to_json(spec));
    return arr;
}

void require_rings(const CommonOptions& opts) {
    if (opts.rings.empty()) throw UsageError("at least one --ring is required");
}

template <class F>
void for_each_ring(const std::vector<RingSpec>& specs, F&& fn) {
    for (const auto& spec : specs) {
        AnyRing any = make_ring(spec);
        std::visit([&](const auto& ring) { fn(ring, spec); }, any);
    }
}

// ---------------------------------------------------------------- pair sweep

std::vector<PairSumInstance> enumerate_pair_cases(int n_max) {
    std::vector<PairSumInstance> cases;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto subsets = all_subsets(n, k);
            for (const auto& s : subsets)
                for (const auto& t : subsets)
                    for (const auto& u : subsets)
                        for (const auto& v : subsets) cases.push_back(PairSumInstance{n, s, t, u, v});
        }
    return cases;
}

template <Ring R>
VerificationReport pair_sweep_for_ring(const R& ring, const RingSpec& spec,
                                       const std::vector<PairSumInstance>& cases, int n_max,
                                       const CommonOptions& opts) {
    const auto start = Clock::now();
    std::vector<PermMatrixTable<R>> tables;
    tables.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) tables.push_back(build_perm_matrix_table(ring, n, opts.cap_perms));

    // one slot per instance so workers never contend and the fold order is
    // the enumeration order regardless of --jobs
    std::vector<std::uint8_t> ok(cases.size(), 0);
    std::vector<Json> records(cases.size());
    parallel_chunks(cases.size(), opts.jobs, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const auto& inst = cases[i];
            const auto closed = pair_sum_closed(ring, inst);
            const auto brute = pair_sum_brute_table(ring, tables[static_cast<std::size_t>(inst.n) - 1], inst);
            if (ring.eq(closed, brute.value)) {
                ok[i] = 1;
            } else {
                Json ce;
                ce["instance"] = pair_sum_instance_to_json(spec, inst);
                ce["closed"] = ring.to_string(closed);
                ce["brute"] = ring.to_string(brute.value);
                ce["witness_rank"] = brute.first_nonzero_rank ? Json(*brute.first_nonzero_rank) : Json(nullptr);
                records[i] = std::move(ce);
            }
        }
    });

    VerificationReport rep;
    rep.suite = "pair_sum_sweep";
    rep.ring = spec;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        ++rep.instances;
        if (ok[i]) {
            ++rep.passes;
        } else {
            ++rep.failures;
            rep.counterexamples.push_back(std::move(records[i]));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

// ----------------------------------------------------- staged random corpora

struct StagedGrid {
    std::vector<std::vector<long>> entries;
    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

StagedGrid stage_grid(SplitMix64& rng, int rows, int cols, long lo, long hi) {
    StagedGrid g;
    g.entries.assign(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols)));
    for (auto& row : g.entries)
        for (auto& e : row) e = rng.range(lo, hi);
    return g;
}

std::vector<int> stage_subset(SplitMix64& rng, int n, int k) {
    const auto subsets = all_subsets(n, k);
    return subsets[static_cast<std::size_t>(rng.range(0, static_cast<long>(subsets.size()) - 1))].elements();
}

template <Ring R>
Matrix<R> embed_grid(const R& ring, const StagedGrid& g) {
    return matrix_from_ints(ring, g.entries);
}

struct StagedCycle {
    std::vector<int> k;
    std::vector<int> p_dims, r_dims;
    std::vector<StagedGrid> a, b, c, d;
    std::vector<std::vector<int>> x, y;
};

/// Instance generation is ring-independent: entries are staged in Z and
/// embedded into each target ring afterwards, so every ring sees the same
/// trial and the report content depends only on the seed.
StagedCycle stage_cycle_sum_instance(SplitMix64& rng, const std::vector<int>& dims, bool want_mismatch) {
    const int d = static_cast<int>(dims.size());
    const auto next = [&](int j) { return (j + 1) % d; };
    std::vector<int> pair_max(static_cast<std::size_t>(d));
    int common_max = dims[0];
    for (int j = 0; j < d; ++j) {
        pair_max[static_cast<std::size_t>(j)] = std::min(dims[static_cast<std::size_t>(j)], dims[static_cast<std::size_t>(next(j))]);
        common_max = std::min(common_max, pair_max[static_cast<std::size_t>(j)]);
    }

    StagedCycle st;
    if (want_mismatch && d >= 2 && common_max >= 1) {
        for (int j = 0; j < d; ++j) st.k.push_back(static_cast<int>(rng.range(0, pair_max[static_cast<std::size_t>(j)])));
        const bool all_equal = std::all_of(st.k.begin(), st.k.end(), [&](int v) { return v == st.k[0]; });
        if (all_equal) st.k[0] = st.k[0] < pair_max[0] ? st.k[0] + 1 : st.k[0] - 1;
    } else {
        const int kk = static_cast<int>(rng.range(0, common_max));
        st.k.assign(static_cast<std::size_t>(d), kk);
    }

    for (int j = 0; j < d; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const int nj = dims[ju];
        const int nn = dims[static_cast<std::size_t>(next(j))];
        const int pj = nj + static_cast<int>(rng.range(0, 1));
        const int rj = nn + static_cast<int>(rng.range(0, 1));
        st.p_dims.push_back(pj);
        st.r_dims.push_back(rj);
        st.a.push_back(stage_grid(rng, nj, nn, -2, 2));
        st.b.push_back(stage_grid(rng, pj, nj, -2, 2));
        st.c.push_back(stage_grid(rng, nn, rj, -2, 2));
        st.x.push_back(stage_subset(rng, pj, st.k[ju]));
        st.y.push_back(stage_subset(rng, rj, st.k[ju]));
    }
    return st;
}

StagedCycle stage_charpoly_instance(SplitMix64& rng, const std::vector<int>& dims) {
    const int d = static_cast<int>(dims.size());
    StagedCycle st;
    for (int j = 0; j < d; ++j) {
        const int nj = dims[static_cast<std::size_t>(j)];
        const int nn = dims[static_cast<std::size_t>((j + 1) % d)];
        st.a.push_back(stage_grid(rng, nj, nn, -2, 2));
        st.d.push_back(stage_grid(rng, nj, nn, -2, 2));
    }
    return st;
}

template <Ring R>
CycleConfig<R> embed_cycle(const R& ring, const std::vector<int>& dims, const StagedCycle& st) {
    CycleConfig<R> cfg;
    cfg.dims = dims;
    cfg.k = st.k;
    for (const auto& g : st.a) cfg.a_mats.push_back(embed_grid(ring, g));
    for (const auto& g : st.b) cfg.b_mats.push_back(embed_grid(ring, g));
    for (const auto& g : st.c) cfg.c_mats.push_back(embed_grid(ring, g));
    for (const auto& g : st.d) cfg.d_mats.push_back(embed_grid(ring, g));
    for (std::size_t j = 0; j < st.x.size(); ++j) cfg.x_sets.emplace_back(st.x[j], st.p_dims[j]);
    for (std::size_t j = 0; j < st.y.size(); ++j) cfg.y_sets.emplace_back(st.y[j], st.r_dims[j]);
    return cfg;
}

void validate_cycle_flags(const std::vector<int>& dims, int trials, const CommonOptions& opts) {
    require_rings(opts);
    if (dims.empty()) throw UsageError("--dims must list at least one dimension");
    int total = 0;
    for (int n : dims) {
        if (n < 1) throw UsageError("every dimension must be >= 1");
        if (n > opts.cap_perms)
            throw UsageError("dimension " + std::to_string(n) + " exceeds --cap-perms " + std::to_string(opts.cap_perms));
        total += n;
    }
    if (total > opts.cap_signs)
        throw UsageError("total dimension " + std::to_string(total) + " exceeds --cap-signs " + std::to_string(opts.cap_signs));
    if (trials < 1) throw UsageError("--trials must be >= 1");
}

template <Ring R>
VerificationReport cycle_trials_for_ring(const R& ring, const RingSpec& spec, const std::vector<int>& dims,
                                         const std::vector<StagedCycle>& staged, const CommonOptions& opts) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "cycle_sum_trials";
    rep.ring = spec;
    const BruteOptions brute_opts{opts.jobs, opts.cap_perms, opts.cap_signs};
    for (std::size_t t = 0; t < staged.size(); ++t) {
        const auto cfg = embed_cycle(ring, dims, staged[t]);
        const auto closed = cycle_sum_closed(ring, cfg);
        const auto brute = cycle_sum_brute(ring, cfg, brute_opts);
        ++rep.instances;
        if (ring.eq(closed, brute.value)) {
            ++rep.passes;
        } else {
            ++rep.failures;
            Json ce;
            ce["trial"] = t;
            ce["instance"] = cycle_config_to_json(cfg);
            ce["closed"] = ring.to_string(closed);
            ce["brute"] = ring.to_string(brute.value);
            ce["witness_rank"] = brute.first_nonzero_rank ? Json(*brute.first_nonzero_rank) : Json(nullptr);
            rep.counterexamples.push_back(std::move(ce));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

template <Ring R>
VerificationReport charpoly_trials_for_ring(const R& ring, const RingSpec& spec, const std::vector<int>& dims,
                                            const std::vector<StagedCycle>& staged, const CommonOptions& opts) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "charpoly_sum_trials";
    rep.ring = spec;
    const BruteOptions brute_opts{opts.jobs, opts.cap_perms, opts.cap_signs};
    const int n0 = dims[0];
    for (std::size_t t = 0; t < staged.size(); ++t) {
        const auto cfg = embed_cycle(ring, dims, staged[t]);
        const auto closed = charpoly_sum_closed(ring, cfg);
        const auto brute = charpoly_sum_brute(ring, cfg, brute_opts);
        std::vector<bool> match(static_cast<std::size_t>(n0) + 1);
        bool all = true;
        for (int k = 0; k <= n0; ++k) {
            const auto idx = static_cast<std::size_t>(n0 - k);
            match[static_cast<std::size_t>(k)] = ring.eq(closed.coeffs[idx], brute.value.coeffs[idx]);
            all = all && match[static_cast<std::size_t>(k)];
        }
        ++rep.instances;
        if (all) {
            ++rep.passes;
        } else {
            ++rep.failures;
            // the comparison record carries the ingredient charpolys so a
            // reader can recompute the convolution by hand
            std::optional<Matrix<R>> prod_a, prod_d;
            for (const auto& m : cfg.a_mats) prod_a = prod_a ? *prod_a * m : m;
            for (const auto& m : cfg.d_mats) prod_d = prod_d ? *prod_d * m : m;
            const auto pa = charpoly_coeffs(*prod_a);
            const auto pd = charpoly_coeffs(*prod_d);
            const auto high_to_low = [&](const Polynomial<R>& poly) {
                Json arr = Json::array();
                for (int k = 0; k <= n0; ++k) arr.push_back(ring.to_string(poly.coeffs[static_cast<std::size_t>(n0 - k)]));
                return arr;
            };
            Json ce;
            ce["trial"] = t;
            ce["instance"] = cycle_config_to_json(cfg);
            ce["p"] = high_to_low(pa);
            ce["q"] = high_to_low(pd);
            ce["r_closed"] = high_to_low(closed);
            ce["r_brute"] = high_to_low(brute.value);
            ce["match"] = Json(match);
            ce["witness_rank"] = brute.first_nonzero_rank ? Json(*brute.first_nonzero_rank) : Json(nullptr);
            rep.counterexamples.push_back(std::move(ce));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

// ------------------------------------------------------------ kernel suites

struct StagedProductMinor {
    StagedGrid a, b;
    std::vector<int> s, t;
};

struct StagedCompound {
    StagedGrid a, b;
    int k = 0;
};

struct StagedSumExpansion {
    StagedGrid a, d;
    std::vector<int> s, t;
};

struct KernelCorpus {
    std::vector<StagedProductMinor> product_minor;
    std::vector<StagedCompound> compound;
    std::vector<StagedGrid> charpoly;
    std::vector<StagedSumExpansion> sum_expansion;
};

KernelCorpus stage_kernel_corpus(std::uint64_t seed) {
    SplitMix64 rng(seed);
    KernelCorpus corpus;
    for (int i = 0; i < 100; ++i) {
        StagedProductMinor inst;
        const int m = static_cast<int>(rng.range(1, 4));
        const int p = static_cast<int>(rng.range(1, 4));
        const int q = static_cast<int>(rng.range(1, 4));
        const int k = static_cast<int>(rng.range(0, std::min({m, p, q})));
        inst.a = stage_grid(rng, m, p, -3, 3);
        inst.b = stage_grid(rng, p, q, -3, 3);
        inst.s = stage_subset(rng, m, k);
        inst.t = stage_subset(rng, q, k);
        corpus.product_minor.push_back(std::move(inst));
    }
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int rep = 0; rep < 5; ++rep)
                corpus.compound.push_back({stage_grid(rng, n, n, -3, 3), stage_grid(rng, n, n, -3, 3), k});
    for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 10; ++rep) corpus.charpoly.push_back(stage_grid(rng, n, n, -3, 3));
    for (int i = 0; i < 100; ++i) {
        StagedSumExpansion inst;
        const int n = static_cast<int>(rng.range(1, 4));
        const int k = static_cast<int>(rng.range(0, std::min(3, n)));
        inst.a = stage_grid(rng, n, n, -3, 3);
        inst.d = stage_grid(rng, n, n, -3, 3);
        inst.s = stage_subset(rng, n, k);
        inst.t = stage_subset(rng, n, k);
        corpus.sum_expansion.push_back(std::move(inst));
    }
    return corpus;
}

template <Ring R>
Json value_mismatch_record(const R& ring, std::size_t index, Json instance, const typename R::Elem& left,
                           const typename R::Elem& right) {
    Json ce;
    ce["index"] = index;
    ce["instance"] = std::move(instance);
    ce["left"] = ring.to_string(left);
    ce["right"] = ring.to_string(right);
    return ce;
}

template <Ring R>
VerificationReport product_minor_suite(const R& ring, const RingSpec& spec, const KernelCorpus& corpus) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "product_minor_expansion";
    rep.ring = spec;
    for (std::size_t i = 0; i < corpus.product_minor.size(); ++i) {
        const auto& st = corpus.product_minor[i];
        const auto a = embed_grid(ring, st.a);
        const auto b = embed_grid(ring, st.b);
        const IndexSet s(st.s, static_cast<int>(a.rows()));
        const IndexSet t(st.t, static_cast<int>(b.cols()));
        const auto left = minor_of_product(a, b, s, t);
        const auto right = minor(a * b, s, t);
        ++rep.instances;
        if (ring.eq(left, right)) {
            ++rep.passes;
        } else {
            ++rep.failures;
            Json inst;
            inst["a"] = matrix_to_json(a);
            inst["b"] = matrix_to_json(b);
            inst["s"] = index_set_to_json(s);
            inst["t"] = index_set_to_json(t);
            rep.counterexamples.push_back(value_mismatch_record(ring, i, std::move(inst), left, right));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

template <Ring R>
VerificationReport compound_suite(const R& ring, const RingSpec& spec, const KernelCorpus& corpus) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "compound_multiplicativity";
    rep.ring = spec;
    for (std::size_t i = 0; i < corpus.compound.size(); ++i) {
        const auto& st = corpus.compound[i];
        const auto a = embed_grid(ring, st.a);
        const auto b = embed_grid(ring, st.b);
        const auto k = static_cast<std::size_t>(st.k);
        const auto left = compound(a * b, k);
        const auto right = compound(a, k) * compound(b, k);
        ++rep.instances;
        if (left == right) {
            ++rep.passes;
        } else {
            ++rep.failures;
            Json ce;
            ce["index"] = i;
            Json inst;
            inst["a"] = matrix_to_json(a);
            inst["b"] = matrix_to_json(b);
            inst["k"] = st.k;
            ce["instance"] = std::move(inst);
            ce["left"] = matrix_to_json(left);
            ce["right"] = matrix_to_json(right);
            rep.counterexamples.push_back(std::move(ce));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

template <Ring R>
VerificationReport charpoly_kernel_suite(const R& ring, const RingSpec& spec, const KernelCorpus& corpus) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "charpoly_principal_minor_sums";
    rep.ring = spec;
    for (std::size_t i = 0; i < corpus.charpoly.size(); ++i) {
        const auto a = embed_grid(ring, corpus.charpoly[i]);
        const auto n = a.rows();
        const auto poly = charpoly_coeffs(a);
        bool all = true;
        std::vector<bool> match(n + 1);
        for (std::size_t deg_idx = 0; deg_idx <= n; ++deg_idx) {
            const auto lhs = poly.coeffs[n - deg_idx];
            const auto rhs = principal_minor_sum(a, deg_idx);
            match[deg_idx] = ring.eq(lhs, rhs);
            all = all && match[deg_idx];
        }
        ++rep.instances;
        if (all) {
            ++rep.passes;
        } else {
            ++rep.failures;
            Json ce;
            ce["index"] = i;
            ce["instance"] = matrix_to_json(a);
            ce["charpoly"] = polynomial_to_json(ring, poly);
            ce["match"] = Json(match);
            rep.counterexamples.push_back(std::move(ce));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

template <Ring R>
VerificationReport sum_expansion_suite(const R& ring, const RingSpec& spec, const KernelCorpus& corpus) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.suite = "minor_of_sum_expansion";
    rep.ring = spec;
    for (std::size_t i = 0; i < corpus.sum_expansion.size(); ++i) {
        const auto& st = corpus.sum_expansion[i];
        const auto a = embed_grid(ring, st.a);
        const auto d = embed_grid(ring, st.d);
        const IndexSet s(st.s, static_cast<int>(a.rows()));
        const IndexSet t(st.t, static_cast<int>(a.cols()));
        const auto left = minor_of_sum_expansion(a, d, s, t);
        const auto right = minor(a + d, s, t);
        ++rep.instances;
        if (ring.eq(left, right)) {
            ++rep.passes;
        } else {
            ++rep.failures;
            Json inst;
            inst["a"] = matrix_to_json(a);
            inst["d"] = matrix_to_json(d);
            inst["s"] = index_set_to_json(s);
            inst["t"] = index_set_to_json(t);
            rep.counterexamples.push_back(value_mismatch_record(ring, i, std::move(inst), left, right));
        }
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

}  // namespace

RunResult run_lemma1(const PairSweepParams& params, const CommonOptions& opts) {
    require_rings(opts);
    if (params.n_max < 1 || params.n_max > 6)
        throw UsageError("n_max must be between 1 and 6 (got " + std::to_string(params.n_max) + ")");
    if (params.n_max > opts.cap_perms)
        throw UsageError("n_max " + std::to_string(params.n_max) + " exceeds --cap-perms " + std::to_string(opts.cap_perms));

    const auto cases = enumerate_pair_cases(params.n_max);
    RunResult rr;
    rr.command = "verify-lemma1";
    rr.params["n_max"] = params.n_max;
    rr.params["rings"] = rings_to_json(opts.rings);
    rr.params["seed"] = opts.seed;
    rr.params["cap_perms"] = opts.cap_perms;
    rr.params["cap_signs"] = opts.cap_signs;
    for_each_ring(opts.rings, [&](const auto& ring, const RingSpec& spec) {
        rr.reports.push_back(pair_sweep_for_ring(ring, spec, cases, params.n_max, opts));
    });
    return rr;
}

RunResult run_lemma3(const CycleTrialParams& params, const CommonOptions& opts) {
    validate_cycle_flags(params.dims, params.trials, opts);
    SplitMix64 rng(opts.seed);
    std::vector<StagedCycle> staged;
    staged.reserve(static_cast<std::size_t>(params.trials));
    for (int t = 0; t < params.trials; ++t)
        staged.push_back(stage_cycle_sum_instance(rng, params.dims, t % 4 == 3));

    RunResult rr;
    rr.command = "verify-lemma3";
    rr.params["d"] = params.dims.size();
    rr.params["dims"] = params.dims;
    rr.params["trials"] = params.trials;
    rr.params["rings"] = rings_to_json(opts.rings);
    rr.params["seed"] = opts.seed;
    rr.params["cap_perms"] = opts.cap_perms;
    rr.params["cap_signs"] = opts.cap_signs;
    for_each_ring(opts.rings, [&](const auto& ring, const RingSpec& spec) {
        rr.reports.push_back(cycle_trials_for_ring(ring, spec, params.dims, staged, opts));
    });
    return rr;
}

RunResult run_corollary(const CycleTrialParams& params, const CommonOptions& opts) {
    validate_cycle_flags(params.dims, params.trials, opts);
    SplitMix64 rng(opts.seed);
    std::vector<StagedCycle> staged;
    staged.reserve(static_cast<std::size_t>(params.trials));
    for (int t = 0; t < params.trials; ++t) staged.push_back(stage_charpoly_instance(rng, params.dims));

    RunResult rr;
    rr.command = "verify-corollary";
    rr.params["d"] = params.dims.size();
    rr.params["dims"] = params.dims;
    rr.params["trials"] = params.trials;
    rr.params["rings"] = rings_to_json(opts.rings);
    rr.params["seed"] = opts.seed;
    rr.params["cap_perms"] = opts.cap_perms;
    rr.params["cap_signs"] = opts.cap_signs;
    for_each_ring(opts.rings, [&](const auto& ring, const RingSpec& spec) {
        rr.reports.push_back(charpoly_trials_for_ring(ring, spec, params.dims, staged, opts));
    });
    return rr;
}

RunResult run_kernels(const CommonOptions& opts) {
    require_rings(opts);
    const auto corpus = stage_kernel_corpus(opts.seed);

    RunResult rr;
    rr.command = "verify-kernels";
    rr.params["rings"] = rings_to_json(opts.rings);
    rr.params["seed"] = opts.seed;
    rr.params["cap_perms"] = opts.cap_perms;
    rr.params["cap_signs"] = opts.cap_signs;
    for_each_ring(opts.rings, [&](const auto& ring, const RingSpec& spec) {
        rr.reports.push_back(product_minor_suite(ring, spec, corpus));
        rr.reports.push_back(compound_suite(ring, spec, corpus));
        rr.reports.push_back(charpoly_kernel_suite(ring, spec, corpus));
        rr.reports.push_back(sum_expansion_suite(ring, spec, corpus));
    });
    return rr;
}

}  // namespace minorsum
