#include "minorsum/json_io.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/polynomial.hpp"
#include "minorsum/report.hpp"
#include "minorsum/sums.hpp"
#include "minorsum/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace minorsum;

struct CommonCli {
    std::vector<std::string> rings;
    std::uint64_t seed = 0;
    int jobs = 1;
    int cap_perms = kDefaultPermCap;
    int cap_signs = kDefaultSignBitCap;
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonCli& c, bool with_rings = true) {
    if (with_rings)
        cmd->add_option("--ring", c.rings, "target ring: int, rat, or mod:<m> (repeatable)");
    cmd->add_option("--seed", c.seed, "seed for deterministic instance generation");
    cmd->add_option("--jobs", c.jobs, "worker count for brute-force enumeration");
    cmd->add_option("--out", c.out, "write the report here instead of stdout");
    cmd->add_option("--cap-perms", c.cap_perms, "largest permutation degree the enumerator accepts");
    cmd->add_option("--cap-signs", c.cap_signs, "largest total sign-bit count the enumerator accepts");
}

std::vector<RingSpec> parse_ring_flags(const std::vector<std::string>& args) {
    std::vector<RingSpec> specs;
    specs.reserve(args.size());
    for (const auto& a : args) {
        try {
            specs.push_back(RingSpec::parse(a));
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --ring value \"") + a + "\": " + e.what());
        }
    }
    return specs;
}

CommonOptions to_options(const CommonCli& c) {
    if (c.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (c.cap_perms < 1) throw UsageError("--cap-perms must be >= 1");
    if (c.cap_signs < 1) throw UsageError("--cap-signs must be >= 1");
    CommonOptions opts;
    opts.rings = parse_ring_flags(c.rings);
    opts.seed = c.seed;
    opts.jobs = c.jobs;
    opts.cap_perms = c.cap_perms;
    opts.cap_signs = c.cap_signs;
    return opts;
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << bytes;
    if (!f) throw UsageError("failed writing output file: " + path);
}

int finish_verify(const RunResult& rr, const std::string& out) {
    write_output(out, rr.to_bytes());
    for (const auto& rep : rr.reports)
        std::cerr << rr.command << ": " << rep.suite << " over " << rep.ring.to_string() << ": " << rep.instances
                  << " instances, " << rep.failures << " failures, " << rep.wall_ms << " ms\n";
    return rr.total_failures() == 0 ? 0 : 1;
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open input file: " + path);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = e.byte > 0 ? std::min<std::size_t>(e.byte - 1, text.size()) : 0;
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(path + ": invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

template <class F>
Json with_ring(const RingSpec& spec, F&& fn) {
    AnyRing any = make_ring(spec);
    return std::visit([&](const auto& ring) -> Json { return fn(ring); }, any);
}

std::size_t require_size(const Json& j, const std::string& where) {
    const long v = require_long(j, where);
    if (v < 0) parse_fail(where, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

int run_eval(const std::string& op, const std::string& file, const CommonCli& cli) {
    const Json in = load_json_file(file);
    const std::string where = "input";
    const BruteOptions brute_opts{cli.jobs, cli.cap_perms, cli.cap_signs};
    Json result;

    if (op == "determinant" || op == "minor" || op == "compound" || op == "principal_minor_sum" ||
        op == "charpoly_coeffs") {
        const Json& mj = require_field(in, "matrix", where);
        const RingSpec spec = peek_ring_spec(mj, where + ".matrix");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto m = matrix_from_json(ring, mj, where + ".matrix");
            if (op == "determinant") return Json(ring.to_string(determinant(m)));
            if (op == "charpoly_coeffs") return polynomial_to_json(ring, charpoly_coeffs(m));
            if (op == "compound")
                return matrix_to_json(compound(m, require_size(require_field(in, "k", where), where + ".k")));
            if (op == "principal_minor_sum")
                return Json(ring.to_string(principal_minor_sum(m, require_size(require_field(in, "k", where), where + ".k"))));
            const auto s = index_set_from_json(require_field(in, "s", where), static_cast<int>(m.rows()), where + ".s");
            const auto t = index_set_from_json(require_field(in, "t", where), static_cast<int>(m.cols()), where + ".t");
            return Json(ring.to_string(minor(m, s, t)));
        });
    } else if (op == "minor_of_product") {
        const Json& aj = require_field(in, "a", where);
        const Json& bj = require_field(in, "b", where);
        const RingSpec spec = peek_ring_spec(aj, where + ".a");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto a = matrix_from_json(ring, aj, where + ".a");
            const auto b = matrix_from_json(ring, bj, where + ".b");
            const auto s = index_set_from_json(require_field(in, "s", where), static_cast<int>(a.rows()), where + ".s");
            const auto t = index_set_from_json(require_field(in, "t", where), static_cast<int>(b.cols()), where + ".t");
            return Json(ring.to_string(minor_of_product(a, b, s, t)));
        });
    } else if (op == "minor_of_sum_expansion") {
        const Json& aj = require_field(in, "a", where);
        const Json& dj = require_field(in, "d", where);
        const RingSpec spec = peek_ring_spec(aj, where + ".a");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto a = matrix_from_json(ring, aj, where + ".a");
            const auto dm = matrix_from_json(ring, dj, where + ".d");
            const auto s = index_set_from_json(require_field(in, "s", where), static_cast<int>(a.rows()), where + ".s");
            const auto t = index_set_from_json(require_field(in, "t", where), static_cast<int>(a.cols()), where + ".t");
            return Json(ring.to_string(minor_of_sum_expansion(a, dm, s, t)));
        });
    } else if (op == "r_stat") {
        const int universe = static_cast<int>(require_long(require_field(in, "universe", where), where + ".universe"));
        const auto x = index_set_from_json(require_field(in, "x", where), universe, where + ".x");
        const int t = static_cast<int>(require_long(require_field(in, "t", where), where + ".t"));
        result = Json(rank_below(t, x));
    } else if (op == "s_stat") {
        const int universe = static_cast<int>(require_long(require_field(in, "universe", where), where + ".universe"));
        const auto x = index_set_from_json(require_field(in, "x", where), universe, where + ".x");
        const auto y = index_set_from_json(require_field(in, "y", where), universe, where + ".y");
        result = Json(sign_exponent(x, y));
    } else if (op == "perm_matrix" || op == "inverse_matrix") {
        const RingSpec spec = peek_ring_spec(in, where);
        const auto p = permutation_from_json(require_field(in, "p", where), where + ".p");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            return matrix_to_json(op == "perm_matrix" ? perm_matrix(ring, p) : inverse_matrix(ring, p));
        });
    } else if (op == "perm_pair_sum_closed" || op == "perm_pair_sum_brute") {
        const RingSpec spec = peek_ring_spec(in, where);
        const auto inst = pair_sum_instance_from_json(in, where);
        result = with_ring(spec, [&](const auto& ring) -> Json {
            if (op == "perm_pair_sum_closed") return Json(ring.to_string(pair_sum_closed(ring, inst)));
            return Json(ring.to_string(pair_sum_brute(ring, inst, brute_opts).value));
        });
    } else if (op == "build_M") {
        const Json& cj = require_field(in, "config", where);
        const RingSpec spec = peek_cycle_config_ring(cj, where + ".config");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto cfg = cycle_config_from_json(ring, cj, where + ".config");
            const Json& pj = require_field(in, "p", where);
            const Json& qj = require_field(in, "q", where);
            if (!pj.is_array() || !qj.is_array()) parse_fail(where, "p and q must be arrays");
            std::vector<Permutation> perms;
            std::vector<SignVector> signs;
            for (std::size_t i = 0; i < pj.size(); ++i)
                perms.push_back(permutation_from_json(pj[i], where + ".p[" + std::to_string(i) + "]"));
            for (std::size_t i = 0; i < qj.size(); ++i)
                signs.push_back(sign_vector_from_json(qj[i], where + ".q[" + std::to_string(i) + "]"));
            return matrix_to_json(cycle_matrix(ring, cfg, perms, signs));
        });
    } else if (op == "tuple_product_sum_closed" || op == "tuple_product_sum_brute") {
        const Json& cj = require_field(in, "config", where);
        const RingSpec spec = peek_cycle_config_ring(cj, where + ".config");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto cfg = cycle_config_from_json(ring, cj, where + ".config");
            if (op == "tuple_product_sum_closed") return Json(ring.to_string(cycle_sum_closed(ring, cfg)));
            return Json(ring.to_string(cycle_sum_brute(ring, cfg, brute_opts).value));
        });
    } else if (op == "charpoly_sum_closed" || op == "charpoly_sum_brute") {
        const Json& cj = require_field(in, "config", where);
        const RingSpec spec = peek_cycle_config_ring(cj, where + ".config");
        result = with_ring(spec, [&](const auto& ring) -> Json {
            const auto cfg = cycle_config_from_json(ring, cj, where + ".config");
            if (op == "charpoly_sum_closed") return polynomial_to_json(ring, charpoly_sum_closed(ring, cfg));
            return polynomial_to_json(ring, charpoly_sum_brute(ring, cfg, brute_opts).value);
        });
    } else {
        throw UsageError(
            "unknown op \"" + op +
            "\"; known ops: determinant, minor, minor_of_product, compound, principal_minor_sum, charpoly_coeffs, "
            "minor_of_sum_expansion, r_stat, s_stat, perm_matrix, inverse_matrix, perm_pair_sum_closed, "
            "perm_pair_sum_brute, build_M, tuple_product_sum_closed, tuple_product_sum_brute, charpoly_sum_closed, "
            "charpoly_sum_brute");
    }

    write_output(cli.out, result.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of minor-product sums over permutation and sign matrices"};
    app.require_subcommand(1);

    CommonCli lemma1_cli, lemma3_cli, corollary_cli, kernels_cli, eval_cli;
    lemma3_cli.cap_signs = 8;
    corollary_cli.cap_signs = 8;

    int n_max = 5;
    auto* lemma1 = app.add_subcommand("verify-lemma1", "exhaustive pair-sum sweep over all index quadruples");
    lemma1->add_option("--n-max", n_max, "largest matrix degree to sweep (<= 6)");
    add_common_flags(lemma1, lemma1_cli);

    std::vector<int> lemma3_dims;
    int lemma3_d = 0;
    int lemma3_trials = 20;
    auto* lemma3 = app.add_subcommand("verify-lemma3", "randomized cycle minor-product sum trials for one shape");
    lemma3->add_option("--dims", lemma3_dims, "cycle dimensions n_0,...,n_{d-1}")->required()->delimiter(',');
    lemma3->add_option("--d", lemma3_d, "cycle length (checked against --dims)");
    lemma3->add_option("--trials", lemma3_trials, "seeded instances to run");
    add_common_flags(lemma3, lemma3_cli);

    std::vector<int> corollary_dims;
    int corollary_d = 0;
    int corollary_trials = 10;
    auto* corollary = app.add_subcommand("verify-corollary", "randomized summed-charpoly trials for one shape");
    corollary->add_option("--dims", corollary_dims, "cycle dimensions n_0,...,n_{d-1}")->required()->delimiter(',');
    corollary->add_option("--d", corollary_d, "cycle length (checked against --dims)");
    corollary->add_option("--trials", corollary_trials, "seeded instances to run");
    add_common_flags(corollary, corollary_cli);

    auto* kernels = app.add_subcommand("verify-kernels", "matrix-kernel property suites over the configured rings");
    add_common_flags(kernels, kernels_cli);

    std::string eval_op, eval_file;
    auto* eval = app.add_subcommand("eval", "evaluate one operation on a JSON instance file");
    eval->add_option("op", eval_op, "operation name")->required();
    eval->add_option("file", eval_file, "JSON instance file")->required();
    add_common_flags(eval, eval_cli, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lemma1) return finish_verify(run_lemma1({n_max}, to_options(lemma1_cli)), lemma1_cli.out);
        if (*lemma3) {
            if (lemma3->count("--d") && lemma3_d != static_cast<int>(lemma3_dims.size()))
                throw UsageError("--d does not match the number of --dims entries");
            return finish_verify(run_lemma3({lemma3_dims, lemma3_trials}, to_options(lemma3_cli)), lemma3_cli.out);
        }
        if (*corollary) {
            if (corollary->count("--d") && corollary_d != static_cast<int>(corollary_dims.size()))
                throw UsageError("--d does not match the number of --dims entries");
            return finish_verify(run_corollary({corollary_dims, corollary_trials}, to_options(corollary_cli)),
                                 corollary_cli.out);
        }
        if (*kernels) return finish_verify(run_kernels(to_options(kernels_cli)), kernels_cli.out);
        if (*eval) {
            if (eval_cli.jobs < 1) throw UsageError("--jobs must be >= 1");
            return run_eval(eval_op, eval_file, eval_cli);
        }
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
