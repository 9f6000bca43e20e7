/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_LATTICE_HPP
#define SIGVOL_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigvol {

// Exact per-signature counts of integer polynomials of degree d with all
// |coefficients| <= B. Non-monic counts cover every vector with p_d != 0,
// so they sum to (2B+1)^{d+1} - (2B+1)^d; monic counts fix p_d = 1 and sum
// to (2B+1)^d.
struct CountResult {
  int degree = 0;
  long long height = 0;
  bool monic = false;
  std::vector<std::uint64_t> counts;  // indexed by s

  std::uint64_t total() const;
};

struct LatticeOptions {
  // 0 selects the hardware thread count.
  unsigned workers = 0;
  // Upper bound on (2B+1)^{d+1} (or (2B+1)^d monic), checked before any
  // enumeration starts.
  double budget = 1e8;
  // Enumerate only canonical representatives under p <-> -p and
  // X <-> -X and weight them by orbit size. Exact either way; the toggle
  // exists so tests can cross-check against the plain full scan.
  bool use_symmetry = true;
};

// Thrown when the vector count exceeds LatticeOptions::budget.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Counts every (p_0, ..., p_d) with |p_i| <= B and p_d != 0 by exact
// signature classification. Work is partitioned across workers by leading
// coefficient prefixes; integer accumulators make the merge exact in any
// order.
CountResult count_exact(int degree, long long height,
                        const LatticeOptions& opt = {});

// Same enumeration with p_d fixed to 1.
CountResult count_monic(int degree, long long height,
                        const LatticeOptions& opt = {});

struct AsymptoticRow {
  long long height = 0;
  std::uint64_t count = 0;
  // count / B^{d+1}
  double ratio = 0.0;
  // |ratio - 2 * lambda_plus_hat|
  double residual = 0.0;
};

// Empirical check of the leading-order law count ~ lambda * B^{d+1}: the
// limit of the ratio is twice the positive-lead region volume, since the
// full region is the union of the p_d > 0 and p_d < 0 halves of equal
// volume.
struct AsymptoticReport {
  int degree = 0;
  int nonreal_pairs = 0;
  double lambda_plus_hat = 0.0;
  std::vector<AsymptoticRow> rows;
  // max over rows of residual * B, an empirical constant for the O(B^d)
  // error term.
  double max_residual_times_height = 0.0;
};

// Runs count_exact for each height in ascending order and compares the
// normalized ratios against 2 * lambda_plus_hat[s]. lambda_plus_hat is
// indexed by s (only the requested s is read), typically the means of an
// mc_plus run or an exact constant.
AsymptoticReport asymptotic_report(int degree, int nonreal_pairs,
                                   const std::vector<long long>& heights,
                                   const std::vector<double>& lambda_plus_hat,
                                   const LatticeOptions& opt = {});

}  // namespace sigvol

#endif
