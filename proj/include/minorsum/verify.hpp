#pragma once

#include "minorsum/groups.hpp"
#include "minorsum/report.hpp"
#include "minorsum/rings.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorsum {

/// Bad flag combinations and cap violations; the CLI maps this to exit 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::vector<RingSpec> rings;
    std::uint64_t seed = 0;
    int jobs = 1;
    int cap_perms = kDefaultPermCap;
    int cap_signs = kDefaultSignBitCap;
};

struct PairSweepParams {
    int n_max = 5;
};

struct CycleTrialParams {
    std::vector<int> dims;
    int trials = 20;
};

/// Exhaustive sweep of the permutation pair sum: for every n <= n_max,
/// every k <= n and every quadruple (S,T,U,V) of k-subsets, the closed form
/// is checked against the n!-term enumeration. One report per ring.
RunResult run_lemma1(const PairSweepParams& params, const CommonOptions& opts);

/// Seeded random cycle minor-product instances of one shape, including
/// deliberately mismatched window sizes, closed vs brute. One report per
/// ring; the instance stream depends only on the seed, not the ring list.
RunResult run_lemma3(const CycleTrialParams& params, const CommonOptions& opts);

/// Seeded random charpoly-sum instances of one shape, compared
/// coefficient-wise. One report per ring.
RunResult run_corollary(const CycleTrialParams& params, const CommonOptions& opts);

/// The four matrix-kernel property suites (product minors, compound
/// multiplicativity, charpoly vs principal minor sums, minor-of-sum
/// expansion) over every configured ring.
RunResult run_kernels(const CommonOptions& opts);

}  // namespace minorsum
