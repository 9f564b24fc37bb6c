#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/minors.hpp"
#include "core/region.hpp"
#include "core/tiling.hpp"

namespace dominor {

struct VerificationReport {
  std::string theorem;  // "thm1", "thm2", "thm3", "dodgson", "jaw", "recurrence", "kuo"
  std::string params;   // case descriptor
  std::string lhs, rhs;
  bool equal = false;
  std::size_t region_cells = 0;
  long long tilings = -1;  // filled when cheap to count
  double ms = 0.0;
  std::string note;
};

// CON_{a,b,y}(M) = P(TAD_{x-h,y}^{|h|,n}) with matrix-mode weights.
VerificationReport verify_theorem1(const WeightMap& w, int a, int b, int y);

// SM / SMbar minor against the tiling polynomial of the Q / Q-bar region.
// The spec's side selects the theorem; mirrored regions are used for SMbar.
VerificationReport verify_theorem_sm(const WeightMap& w, const SemiContigSpec& spec);

// Derives an (a, b) pair whose anchor block realizes the given (x, h); used
// to run the figure-captioned parameter sets.
SemiContigSpec spec_for_offset(int x, SignedOffset h, const std::vector<int>& ks,
                               const std::vector<int>& ts, int n, SemiContigSpec::Side side);

struct SweepOptions {
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 = hardware concurrency
  std::function<void(const VerificationReport&)> on_report;  // streamed, in order
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  int pass = 0, fail = 0;
  bool all_equal() const { return fail == 0; }
};

// Samples a generic matrix for the given size: entries uniform p/q with
// p in [-mag, mag], q in [1, den]; resamples until every central minor
// CM_{x,y}, 1 <= y <= n, is nonzero.
Matrix sample_generic_matrix(int n, Rng& rng, long mag = 9, long den = 1);

// Theorem 1 over every (a, b, y) with 0 <= y <= n/2, for several matrices.
SweepResult theorem1_sweep(const std::vector<int>& sizes, int matrices_per_size,
                           const SweepOptions& opts);

// Theorems 2 and 3 over all (a, b) for every s=2 spec with k_i <= kmax,
// t_1 <= tmax, plus the figure-captioned parameter sets.
SweepResult theorem_sm_sweep(const std::vector<int>& sizes, int kmax, int tmax,
                             SemiContigSpec::Side side, bool captioned_cases,
                             const SweepOptions& opts);

// Dodgson, jaw-move, recurrence and Kuo checks on random inputs.
SweepResult condensation_suite(int dodgson, int jaw, int recurrence, int kuo_per_variant,
                               const SweepOptions& opts);

}  // namespace dominor
