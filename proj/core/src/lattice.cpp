/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/lattice.hpp"

#include <cmath>
#include <thread>

#include "zpoly.hpp"

namespace sigvol {
namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// The classification is invariant under p <-> -p and under X <-> -X (which
// maps p_i to (-1)^{d-i} p_i). With symmetry enabled the enumeration visits
// one representative per orbit and weights it by the orbit size:
//
//  - leads are restricted to p_d > 0 (doubling the weight, non-monic only);
//  - among the coordinates that X <-> -X negates (those with d - i odd),
//    the first nonzero one, scanning i = d-1 down to 0, must be positive;
//    if they are all zero the vector is its own mirror image (weight 1),
//    otherwise the mirror is distinct (weight 2).
struct Enumerator {
  int d;
  long long B;
  std::uint64_t lead_weight;
  bool use_symmetry;
  std::vector<long long> coeffs;
  std::vector<std::uint64_t> counts;
  detail::ExactClassifier classifier;

  void classify_current(std::uint64_t flip_weight) {
    int s = classifier.classify(coeffs.data(), d);
    counts[static_cast<std::size_t>(s)] += lead_weight * flip_weight;
  }

  // idx runs d-1 down to -1; `undecided` = no nonzero mirrored coordinate
  // chosen yet.
  void recurse(int idx, bool undecided) {
    if (idx < 0) {
      classify_current(undecided ? 1 : 2);
      return;
    }
    const bool mirrored = ((d - idx) & 1) != 0;
    auto& slot = coeffs[static_cast<std::size_t>(idx)];
    if (use_symmetry && mirrored && undecided) {
      slot = 0;
      recurse(idx - 1, true);
      for (long long v = 1; v <= B; ++v) {
        slot = v;
        recurse(idx - 1, false);
      }
    } else {
      for (long long v = -B; v <= B; ++v) {
        slot = v;
        recurse(idx - 1, undecided);
      }
    }
  }
};

CountResult count_impl(int degree, long long height, bool monic,
                       const LatticeOptions& opt) {
  if (degree < 1) throw std::invalid_argument("count: degree must be >= 1");
  if (height < 1) throw std::invalid_argument("count: height must be >= 1");
  const double side = 2.0 * static_cast<double>(height) + 1.0;
  const double space = ipow(side, monic ? degree : degree + 1);
  if (space > opt.budget) {
    throw budget_error("count: vector count " + std::to_string(space) +
                       " exceeds budget " + std::to_string(opt.budget));
  }

  const int d = degree;
  const long long B = height;
  const std::size_t bins = static_cast<std::size_t>(d / 2) + 1;

  // Prefixes partition the work; each worker owns the suffix enumeration
  // below its share of (p_d, p_{d-1}) pairs (p_d alone for d = 1).
  struct Prefix {
    long long lead;
    long long second;  // ignored when d == 1
    bool undecided;
    std::uint64_t lead_weight;
  };
  std::vector<Prefix> prefixes;
  std::vector<long long> leads;
  if (monic) {
    leads.push_back(1);
  } else if (opt.use_symmetry) {
    for (long long v = 1; v <= B; ++v) leads.push_back(v);
  } else {
    for (long long v = -B; v <= B; ++v) {
      if (v != 0) leads.push_back(v);
    }
  }
  const std::uint64_t lead_weight =
      (!monic && opt.use_symmetry) ? 2 : 1;
  for (long long lead : leads) {
    if (d == 1) {
      prefixes.push_back({lead, 0, true, lead_weight});
      continue;
    }
    // p_{d-1} is always a mirrored coordinate (d - (d-1) = 1 is odd).
    if (opt.use_symmetry) {
      prefixes.push_back({lead, 0, true, lead_weight});
      for (long long v = 1; v <= B; ++v) {
        prefixes.push_back({lead, v, false, lead_weight});
      }
    } else {
      for (long long v = -B; v <= B; ++v) {
        prefixes.push_back({lead, v, true, lead_weight});
      }
    }
  }

  const unsigned workers = resolve_workers(opt.workers);
  std::vector<std::vector<std::uint64_t>> parts(
      workers, std::vector<std::uint64_t>(bins, 0));
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      Enumerator en;
      en.d = d;
      en.B = B;
      en.use_symmetry = opt.use_symmetry;
      en.coeffs.assign(static_cast<std::size_t>(d) + 1, 0);
      en.counts.assign(bins, 0);
      for (std::size_t i = w; i < prefixes.size(); i += workers) {
        const Prefix& pf = prefixes[i];
        en.lead_weight = pf.lead_weight;
        en.coeffs[static_cast<std::size_t>(d)] = pf.lead;
        if (d == 1) {
          en.recurse(0, true);
        } else {
          en.coeffs[static_cast<std::size_t>(d - 1)] = pf.second;
          en.recurse(d - 2, pf.undecided);
        }
      }
      parts[w] = std::move(en.counts);
    });
  }
  for (auto& t : threads) t.join();

  CountResult result;
  result.degree = d;
  result.height = B;
  result.monic = monic;
  result.counts.assign(bins, 0);
  for (const auto& part : parts) {
    for (std::size_t s = 0; s < bins; ++s) result.counts[s] += part[s];
  }
  return result;
}

}  // namespace

std::uint64_t CountResult::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

CountResult count_exact(int degree, long long height,
                        const LatticeOptions& opt) {
  return count_impl(degree, height, false, opt);
}

CountResult count_monic(int degree, long long height,
                        const LatticeOptions& opt) {
  return count_impl(degree, height, true, opt);
}

AsymptoticReport asymptotic_report(int degree, int nonreal_pairs,
                                   const std::vector<long long>& heights,
                                   const std::vector<double>& lambda_plus_hat,
                                   const LatticeOptions& opt) {
  if (nonreal_pairs < 0 || 2 * nonreal_pairs > degree) {
    throw std::invalid_argument("asymptotic_report: invalid signature");
  }
  if (static_cast<std::size_t>(nonreal_pairs) >= lambda_plus_hat.size()) {
    throw std::invalid_argument("asymptotic_report: missing volume estimate");
  }
  if (heights.empty()) {
    throw std::invalid_argument("asymptotic_report: no heights given");
  }
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (heights[i] <= heights[i - 1]) {
      throw std::invalid_argument("asymptotic_report: heights must ascend");
    }
  }
  AsymptoticReport report;
  report.degree = degree;
  report.nonreal_pairs = nonreal_pairs;
  report.lambda_plus_hat =
      lambda_plus_hat[static_cast<std::size_t>(nonreal_pairs)];
  const double limit = 2.0 * report.lambda_plus_hat;
  for (long long b : heights) {
    CountResult cr = count_exact(degree, b, opt);
    AsymptoticRow row;
    row.height = b;
    row.count = cr.counts[static_cast<std::size_t>(nonreal_pairs)];
    row.ratio = static_cast<double>(row.count) /
                ipow(static_cast<double>(b), degree + 1);
    row.residual = std::fabs(row.ratio - limit);
    const double rb = row.residual * static_cast<double>(b);
    if (rb > report.max_residual_times_height) {
      report.max_residual_times_height = rb;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace sigvol
