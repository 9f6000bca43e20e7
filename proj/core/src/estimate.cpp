/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/estimate.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "float_sturm.hpp"
#include "sigvol/rng.hpp"
#include "sigvol/rootspace.hpp"

namespace sigvol {
namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void validate(const RunConfig& cfg) {
  if (cfg.degree < 1 || cfg.degree > 30) {
    throw std::invalid_argument("estimate: degree must be in [1, 30]");
  }
  if (cfg.samples == 0) throw std::invalid_argument("estimate: samples must be >= 1");
  if (!(cfg.eps >= 0.0)) throw std::invalid_argument("estimate: eps must be >= 0");
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

struct IndicatorTally {
  std::vector<std::uint64_t> hits;
  std::uint64_t discarded = 0;
};

// Shared core of the coefficient-space estimators: draws coefficient
// vectors, classifies them, tallies hits per signature. monic_lead fixes
// p_d = 1; otherwise p_d is drawn uniform from (0, B]. Rejected draws are
// redrawn from the same worker stream and counted.
IndicatorTally run_worker(int d, double height, bool monic_lead,
                          double eps, std::uint64_t seed,
                          std::uint64_t count) {
  IndicatorTally tally;
  tally.hits.assign(static_cast<std::size_t>(d / 2) + 1, 0);
  Xoshiro256pp rng(seed);
  detail::FloatSturm classifier;
  std::vector<double> coeffs(static_cast<std::size_t>(d) + 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    while (true) {
      if (monic_lead) {
        for (int j = 0; j < d; ++j) {
          coeffs[static_cast<std::size_t>(j)] = rng.uniform(-height, height);
        }
        coeffs[static_cast<std::size_t>(d)] = 1.0;
      } else {
        // Lead first, then the lower coefficients from high to low.
        coeffs[static_cast<std::size_t>(d)] = rng.uniform(0.0, height);
        for (int j = d - 1; j >= 0; --j) {
          coeffs[static_cast<std::size_t>(j)] = rng.uniform(-height, height);
        }
        if (coeffs[static_cast<std::size_t>(d)] <= eps) {
          ++tally.discarded;
          continue;
        }
      }
      auto sig = classifier.classify(coeffs.data(), d + 1, eps);
      if (!sig) {
        ++tally.discarded;
        continue;
      }
      ++tally.hits[static_cast<std::size_t>(sig->nonreal_pairs)];
      break;
    }
  }
  return tally;
}

Estimate run_indicator(const RunConfig& cfg, double height, bool monic_lead,
                       double box_volume) {
  validate(cfg);
  const int d = cfg.degree;
  const unsigned workers = resolve_workers(cfg.workers);
  std::vector<IndicatorTally> parts(workers);
  std::vector<std::thread> threads;
  std::uint64_t base = cfg.samples / workers;
  std::uint64_t extra = cfg.samples % workers;
  std::uint64_t assigned = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t block = base + (w < extra ? 1 : 0);
    std::uint64_t sub = derive_substream_seed(cfg.seed, w);
    threads.emplace_back([&, w, sub, block] {
      parts[w] = run_worker(d, height, monic_lead, cfg.eps, sub, block);
    });
    assigned += block;
  }
  for (auto& t : threads) t.join();
  (void)assigned;

  // Merge in ascending worker order; integer tallies make this exact.
  std::vector<std::uint64_t> hits(static_cast<std::size_t>(d / 2) + 1, 0);
  std::uint64_t discarded = 0;
  for (const auto& p : parts) {
    for (std::size_t s = 0; s < hits.size(); ++s) hits[s] += p.hits[s];
    discarded += p.discarded;
  }

  Estimate est;
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  est.discarded = discarded;
  const double n = static_cast<double>(cfg.samples);
  const std::size_t smax = hits.size() - 1;
  est.mean.resize(hits.size());
  est.std_error.resize(hits.size());
  double partial = 0.0;
  for (std::size_t s = 0; s < smax; ++s) {
    est.mean[s] = box_volume * static_cast<double>(hits[s]) / n;
    partial += est.mean[s];
  }
  // Close the sum: the top component absorbs the rounding of the others,
  // so the ascending-order total equals the box volume to the last bit.
  est.mean[smax] = box_volume - partial;
  for (std::size_t s = 0; s <= smax; ++s) {
    const double p = static_cast<double>(hits[s]) / n;
    est.std_error[s] = box_volume * std::sqrt(p * (1.0 - p) / n);
  }
  return est;
}

}  // namespace

Estimate mc_star(const RunConfig& cfg) {
  return run_indicator(cfg, 1.0, true, ipow(2.0, cfg.degree));
}

ScalarEstimate mc_star_height(int nonreal_pairs, double height,
                              const RunConfig& cfg) {
  if (!(height >= 1.0)) {
    throw std::invalid_argument("mc_star_height: height must be >= 1");
  }
  if (nonreal_pairs < 0 || 2 * nonreal_pairs > cfg.degree) {
    throw std::invalid_argument("mc_star_height: invalid signature");
  }
  Estimate full = run_indicator(cfg, height, true, ipow(2.0 * height, cfg.degree));
  ScalarEstimate out;
  out.value = full.mean[static_cast<std::size_t>(nonreal_pairs)];
  out.std_error = full.std_error[static_cast<std::size_t>(nonreal_pairs)];
  out.samples = full.samples;
  out.seed = full.seed;
  out.discarded = full.discarded;
  return out;
}

Estimate mc_plus(const RunConfig& cfg) {
  return run_indicator(cfg, 1.0, false, ipow(2.0, cfg.degree));
}

Estimate mc_plus_height(double height, const RunConfig& cfg) {
  if (!(height >= 1.0)) {
    throw std::invalid_argument("mc_plus_height: height must be >= 1");
  }
  return run_indicator(cfg, height, false,
                       height * ipow(2.0 * height, cfg.degree));
}

ScalarEstimate mc_rootspace(int degree, int nonreal_pairs, double height,
                            const RunConfig& cfg) {
  RunConfig c = cfg;
  c.degree = degree;
  validate(c);
  const int s = nonreal_pairs;
  const int r = degree - 2 * s;
  if (s < 0 || r < 0) throw std::invalid_argument("mc_rootspace: invalid signature");
  if (!(height >= 1.0)) throw std::invalid_argument("mc_rootspace: height must be >= 1");

  const double half = 1.0 + height;  // Cauchy bound for monic height-B
  const double box_volume = ipow(2.0 * half, degree);
  const unsigned workers = resolve_workers(cfg.workers);

  struct Moments {
    double sum = 0.0, sumsq = 0.0;
  };
  std::vector<Moments> parts(workers);
  std::vector<std::thread> threads;
  std::uint64_t base = cfg.samples / workers;
  std::uint64_t extra = cfg.samples % workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t block = base + (w < extra ? 1 : 0);
    std::uint64_t sub = derive_substream_seed(cfg.seed, w);
    threads.emplace_back([&parts, w, sub, block, r, s, degree, half, height] {
      Xoshiro256pp rng(sub);
      RootTuple t;
      t.x.resize(static_cast<std::size_t>(r));
      t.yz.resize(static_cast<std::size_t>(s));
      RegionSpec spec{degree, s, height};
      Moments m;
      for (std::uint64_t i = 0; i < block; ++i) {
        for (int j = 0; j < r; ++j) {
          t.x[static_cast<std::size_t>(j)] = rng.uniform(-half, half);
        }
        for (int j = 0; j < s; ++j) {
          double y = rng.uniform(-half, half);
          double z = rng.uniform(-half, half);
          t.yz[static_cast<std::size_t>(j)] = {y, z};
        }
        if (!in_region(t, spec)) continue;
        double w2 = jacobian_weight(t);
        m.sum += w2;
        m.sumsq += w2 * w2;
      }
      parts[w] = m;
    });
  }
  for (auto& t : threads) t.join();

  double sum = 0.0, sumsq = 0.0;
  for (const auto& m : parts) {
    sum += m.sum;
    sumsq += m.sumsq;
  }
  const double n = static_cast<double>(cfg.samples);
  double rfact = 1.0, sfact = 1.0;
  for (int i = 2; i <= r; ++i) rfact *= i;
  for (int i = 2; i <= s; ++i) sfact *= i;
  const double factor = ipow(2.0, s) / (rfact * sfact) * box_volume;

  const double mean = sum / n;
  double variance = 0.0;
  if (cfg.samples > 1) {
    variance = (sumsq / n - mean * mean) * (n / (n - 1.0));
    if (variance < 0.0) variance = 0.0;  // rounding guard
  }
  ScalarEstimate out;
  out.value = factor * mean;
  out.std_error = factor * std::sqrt(variance / n);
  out.samples = cfg.samples;
  out.seed = cfg.seed;
  out.discarded = 0;
  return out;
}

}  // namespace sigvol
