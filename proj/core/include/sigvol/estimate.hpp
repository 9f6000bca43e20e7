/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_ESTIMATE_HPP
#define SIGVOL_ESTIMATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace sigvol {

struct RunConfig {
  int degree = 2;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  // 0 selects the hardware thread count.
  unsigned workers = 0;
  // Degeneracy tolerance forwarded to signature_float.
  double eps = 1e-12;
};

// Per-signature volume estimates, indexed by s = 0 .. floor(d/2).
//
// Hit counts are accumulated per worker and merged in ascending worker
// order, so results are bit-reproducible for a fixed (seed, samples,
// workers). The means of the indicator estimators sum to the sampling box
// volume exactly: the top-s component is computed as the closing difference
// box_volume - sum(lower components), which makes the ascending-order total
// land on the box volume to the last bit instead of one rounding away.
struct Estimate {
  std::vector<double> mean;
  std::vector<double> std_error;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t discarded = 0;
};

struct ScalarEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t discarded = 0;
};

// Volume of each signature region of monic polynomials
// X^d + p_{d-1} X^{d-1} + ... + p_0 with coefficients drawn uniformly from
// [-1,1]^d: mean_s = 2^d * hits_s / samples. Rejected draws (too close to
// the degenerate surface for the float classifier) are resampled and
// counted in `discarded`. Requires 1 <= degree <= 30.
Estimate mc_star(const RunConfig& cfg);

// Same with the s component only, over the box [-B, B]^d of height-B monic
// polynomials. mc_star(cfg) agrees with mc_star_height(s, 1, cfg) in
// distribution; this variant exists to back the quadrature over heights.
ScalarEstimate mc_star_height(int nonreal_pairs, double height,
                              const RunConfig& cfg);

// Volume of each signature region of p_d X^d + ... + p_0 with p_d uniform
// on [0,1] and the rest on [-1,1]; box volume is again 2^d. Draws with
// p_d <= eps are resampled and counted.
Estimate mc_plus(const RunConfig& cfg);

// mc_plus over the box [0,B] x [-B,B]^d. Estimates carry the full B^{d+1}
// scaling; dividing by B^{d+1} recovers the B = 1 values.
Estimate mc_plus_height(double height, const RunConfig& cfg);

// Volume of the monic height-B region with signature s, estimated in root
// coordinates: tuples are drawn uniformly from the cube
// [-(1+B), 1+B]^d (the Cauchy bound encloses every root of a height-B
// monic polynomial), and the region indicator times the root-to-coefficient
// Jacobian density is averaged, scaled by 2^s / (r! s!) times the cube
// volume. Standard error comes from the sample variance of the weighted
// integrand. Requires B >= 1 and r = d - 2s >= 0.
ScalarEstimate mc_rootspace(int degree, int nonreal_pairs, double height,
                            const RunConfig& cfg);

// An evaluation of the monic height-B region volume, with a one-sigma
// error bound (zero for exact closed forms).
struct StarEval {
  double value = 0.0;
  double error = 0.0;
};

// Callable for any height B >= 1.
using StarEvalFn = std::function<StarEval(double)>;

struct QuadratureResult {
  double value = 0.0;
  // Quadrature model error plus propagated evaluation error.
  double error_bound = 0.0;
  std::uint64_t evaluations = 0;
  // False when the node budget ran out before the tolerance was met.
  bool converged = false;
};

// Volume of the positive-lead height-1 region with signature s, obtained
// from monic region volumes via the substitution p_d = u:
//
//   integral over u in (0,1] of u^d * star(s, 1/u) du,
//
// by adaptive Simpson quadrature to absolute tolerance tol. The integrand
// argument is clamped to u >= 1e-6, which sidesteps evaluating star areas
// at unbounded heights; the induced tail error is of order 1e-9 for the
// d = 2 closed forms and is far below every tolerance in use.
// Evaluation errors reported by star_eval are propagated into error_bound,
// and intervals whose Simpson defect is below the local evaluation noise
// are accepted rather than refined forever. Non-convergence within
// max_evals is reported via `converged`, never silently.
QuadratureResult plus_from_star_quadrature(int degree, int nonreal_pairs,
                                           const StarEvalFn& star_eval,
                                           double tol,
                                           std::uint64_t max_evals = 1u << 20);

}  // namespace sigvol

#endif
