/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/verify.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sigvol/estimate.hpp"
#include "sigvol/lattice.hpp"
#include "sigvol/output.hpp"
#include "sigvol/poly.hpp"
#include "sigvol/reference.hpp"
#include "sigvol/rng.hpp"
#include "sigvol/rootspace.hpp"

namespace sigvol {
namespace {

// Reference volume tabulations for the two sampling families, one row per
// degree d = 2..15, entries indexed by s = 0..floor(d/2). The values are
// 200000-sample Monte Carlo results accurate to roughly 1%, which is why
// every comparison below allows 1.5% of the tabulated value on top of our
// own sampling error.
const std::vector<std::vector<double>> kStarReference = {
    {2.1652, 1.8348},
    {0.8192, 7.1808},
    {0.0880, 10.2833, 5.6286},
    {0.0021, 6.3378, 25.6602},
    {0.0003, 1.6330, 43.9437, 18.4230},
    {0.0000, 0.1542, 34.128, 93.7178},
    {0.0000, 0.0051, 12.4442, 179.8340, 63.7171},
    {0.0000, 0.0000, 2.0838, 163.8780, 346.0380},
    {0.0000, 0.0000, 0.1434, 72.8678, 728.5040, 222.4840},
    {0.0000, 0.0000, 0.0102, 16.0154, 744.4378, 1287.5366},
    {0.0000, 0.0000, 0.0000, 1.6589, 382.8122, 2909.0406, 802.4883},
    {0.0000, 0.0000, 0.0000, 0.0410, 98.0173, 3227.6070, 4866.3347},
    {0.0000, 0.0000, 0.0000, 0.0000, 10.6496, 1847.4598, 11599.2986,
     2926.5920},
    {0.0000, 0.0000, 0.0000, 0.0000, 0.8192, 574.4230, 13800.5709,
     18392.1869},
};

// The d = 13 row sums to 7831.9, missing 2^13 = 8192 by 360.1, so one of
// its entries is misprinted. It is kept verbatim; the full-suite comparison
// reports the discrepancy rather than hiding it behind a patched value.
const std::vector<std::vector<double>> kPlusReference = {
    {2.5054, 1.4946},
    {1.7540, 6.2460},
    {0.6301, 11.3332, 4.0361},
    {0.1061, 10.7558, 21.1381},
    {0.0128, 5.5776, 45.8112, 12.5984},
    {0.0013, 1.6326, 52.2074, 74.1587},
    {0.0000, 0.2163, 33.6922, 180.6090, 41.4822},
    {0.0000, 0.0154, 12.4595, 232.6550, 266.8700},
    {0.0000, 0.0051, 2.6317, 171.8940, 706.3810, 143.0890},
    {0.0000, 0.0000, 0.3174, 74.3629, 998.0621, 975.2576},
    {0.0000, 0.0000, 0.0000, 18.2886, 814.0595, 2754.4576, 509.1942},
    {0.0000, 0.0000, 0.0000, 2.6214, 400.1792, 4165.5501, 3263.5493},
    {0.0000, 0.0000, 0.0000, 0.4096, 123.2896, 3719.1680, 10721.5258,
     1819.6070},
    {0.0000, 0.0000, 0.0000, 0.0000, 22.1184, 1965.7523, 17215.8157,
     13564.3136},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double constant_value(int degree, int s, bool plus_family) {
  for (const auto& c : exact_constants()) {
    if (c.degree == degree && c.nonreal_pairs == s &&
        c.plus_family == plus_family) {
      return c.value();
    }
  }
  std::abort();  // the table is fixed; a miss is a programming error
}

// Appended to the detail string when a criterion's statistical content
// passed but its runtime bound did not. Detail strings never carry the
// measured time itself, so output stays byte-stable run to run.
const char kGateNote[] = "; runtime bound exceeded";

// Criteria 1-3: sampled signature-region volumes against the closed forms,
// three consecutive seeds, each component within three standard errors.
// time_gate <= 0 means the criterion carries no runtime bound.
CriterionResult constants_criterion(int index, const std::string& name,
                                    int degree, bool plus_family,
                                    double time_gate,
                                    const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  const double exact0 = constant_value(degree, 0, plus_family);
  const double exact1 = constant_value(degree, 1, plus_family);
  bool pass = true;
  double worst = 0.0;  // max |dev| / (3 sigma)
  for (std::uint64_t ds = 0; ds < 3; ++ds) {
    RunConfig cfg;
    cfg.degree = degree;
    cfg.samples = 200000;
    cfg.seed = opt.seed + ds;
    cfg.workers = opt.workers;
    Estimate e = plus_family ? mc_plus(cfg) : mc_star(cfg);
    const double exacts[2] = {exact0, exact1};
    for (int s = 0; s <= 1; ++s) {
      const double dev = std::fabs(e.mean[static_cast<std::size_t>(s)] -
                                   exacts[s]);
      const double band =
          3.0 * e.std_error[static_cast<std::size_t>(s)];
      if (band <= 0.0 || dev > band) pass = false;
      if (band > 0.0 && dev / band > worst) worst = dev / band;
    }
  }
  const bool in_time = time_gate <= 0.0 || seconds_since(t0) < time_gate;
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.passed = pass && in_time;
  r.detail = "max |dev|/3sigma = " + format_real(worst) +
             " over 3 seeds x 2 components";
  if (!in_time) r.detail += kGateNote;
  return r;
}

CriterionResult reference_tables_criterion(const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  const int dmax = opt.full ? 15 : 8;
  bool pass = true;
  bool quick_in_time = true;
  double worst = 0.0;
  std::string worst_at = "none";
  for (int d = 4; d <= dmax; ++d) {
    for (int family = 0; family < 2; ++family) {
      RunConfig cfg;
      cfg.degree = d;
      cfg.samples = 200000;
      cfg.seed = opt.seed;
      cfg.workers = opt.workers;
      Estimate e = family == 0 ? mc_star(cfg) : mc_plus(cfg);
      const auto& row = (family == 0 ? kStarReference
                                     : kPlusReference)[static_cast<std::size_t>(d - 2)];
      // Rare cells see a handful of hits, where the plug-in standard error
      // degenerates (zero hits give sigma = 0 and an empty band). Flooring
      // sigma at the one-hit scale V/n is the Poisson small-count treatment
      // and leaves populated cells untouched.
      const double sigma_floor =
          std::ldexp(1.0, d) / static_cast<double>(cfg.samples);
      for (std::size_t s = 0; s < row.size(); ++s) {
        const double sigma = std::max(e.std_error[s], sigma_floor);
        const double tol = 3.0 * sigma + 0.015 * row[s];
        const double dev = std::fabs(e.mean[s] - row[s]);
        if (dev > tol) pass = false;
        const double ratio = dev / tol;
        if (ratio > worst) {
          worst = ratio;
          worst_at = std::string(family == 0 ? "monic" : "poslead") + " d=" +
                     std::to_string(d) + " s=" + std::to_string(s);
        }
      }
    }
    if (d == 8) quick_in_time = seconds_since(t0) < 120.0;
  }
  if (dmax < 8) quick_in_time = seconds_since(t0) < 120.0;
  CriterionResult r;
  r.index = 4;
  r.name = "reference-tables";
  r.passed = pass && quick_in_time;
  r.detail = "d<=" + std::to_string(dmax) + ", worst dev/tol = " +
             format_real(worst) + " at " + worst_at;
  if (!quick_in_time) r.detail += kGateNote;
  return r;
}

CriterionResult rootspace_criterion(const VerifyOptions& opt) {
  static const int pairs[5][2] = {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 1}};
  Estimate star[3];
  for (int d = 2; d <= 4; ++d) {
    RunConfig cfg;
    cfg.degree = d;
    cfg.samples = 200000;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    star[d - 2] = mc_star(cfg);
  }
  bool pass = true;
  double worst = 0.0;
  std::string worst_at = "none";
  for (const auto& pr : pairs) {
    const int d = pr[0], s = pr[1];
    RunConfig cfg;
    cfg.degree = d;
    cfg.samples = 400000;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    ScalarEstimate root = mc_rootspace(d, s, 1.0, cfg);
    const Estimate& st = star[d - 2];
    const double dev =
        std::fabs(root.value - st.mean[static_cast<std::size_t>(s)]);
    const double band =
        3.0 * std::hypot(root.std_error,
                         st.std_error[static_cast<std::size_t>(s)]);
    if (band <= 0.0 || dev > band) pass = false;
    const double ratio = band > 0.0 ? dev / band : 1e9;
    if (ratio > worst) {
      worst = ratio;
      worst_at = "d=" + std::to_string(d) + " s=" + std::to_string(s);
    }
  }
  CriterionResult r;
  r.index = 5;
  r.name = "rootspace-vs-coefficient";
  r.passed = pass;
  r.detail = "worst |dev|/3sigma = " + format_real(worst) + " at " + worst_at;
  return r;
}

CriterionResult quadrature_criterion(const VerifyOptions&) {
  const auto t0 = Clock::now();
  bool pass = true;
  double worst = 0.0;
  for (int s = 0; s <= 1; ++s) {
    StarEvalFn fn = [s](double b) {
      return StarEval{star_area_d2(s, b), 0.0};
    };
    QuadratureResult q = plus_from_star_quadrature(2, s, fn, 1e-9);
    const double dev = std::fabs(q.value - constant_value(2, s, true));
    if (!q.converged || dev > 1e-6) pass = false;
    if (dev > worst) worst = dev;
  }
  const bool in_time = seconds_since(t0) < 1.0;
  CriterionResult r;
  r.index = 6;
  r.name = "quadrature-closure";
  r.passed = pass && in_time;
  r.detail = "max |quad - closed form| = " + format_real(worst) +
             " (tol 1e-06)";
  if (!in_time) r.detail += kGateNote;
  return r;
}

CriterionResult asymptotics_criterion(const VerifyOptions& opt,
                                      std::vector<CountResult>& runs_out) {
  const auto t0 = Clock::now();
  const double limit = 2.0 * constant_value(2, 1, true);
  static const long long heights[4] = {10, 20, 50, 100};
  LatticeOptions lopt;
  lopt.workers = opt.workers;
  double residual[4];
  double fitted_c = 0.0;
  for (int i = 0; i < 4; ++i) {
    CountResult cr = count_exact(2, heights[i], lopt);
    const double b = static_cast<double>(heights[i]);
    const double ratio = static_cast<double>(cr.counts[1]) / (b * b * b);
    residual[i] = std::fabs(ratio - limit);
    if (residual[i] * b > fitted_c) fitted_c = residual[i] * b;
    runs_out.push_back(std::move(cr));
  }
  // A single C with |ratio(B) - limit| <= C/B exists by taking the max of
  // residual * B; the checks with teeth are that the residuals actually
  // shrink as B grows and that the endpoint sits within 2% of the limit.
  bool monotone = true;
  for (int i = 1; i < 4; ++i) {
    if (residual[i] > residual[i - 1]) monotone = false;
  }
  const bool endpoint = residual[3] <= 0.02 * limit;
  const bool in_time = seconds_since(t0) < 60.0;
  CriterionResult r;
  r.index = 7;
  r.name = "count-asymptotics";
  r.passed = monotone && endpoint && in_time;
  r.detail = "fitted C = " + format_real(fitted_c) +
             ", endpoint residual/limit = " + format_real(residual[3] / limit) +
             " (<= 0.02), residuals " +
             std::string(monotone ? "nonincreasing" : "NOT monotone");
  if (!in_time) r.detail += kGateNote;
  return r;
}

CriterionResult identities_criterion(const VerifyOptions& opt,
                                     const std::vector<CountResult>& runs) {
  LatticeOptions lopt;
  lopt.workers = opt.workers;
  std::vector<CountResult> all = runs;
  all.push_back(count_exact(3, 2, lopt));
  all.push_back(count_monic(3, 2, lopt));
  all.push_back(count_monic(2, 4, lopt));
  bool pass = true;
  for (const auto& cr : all) {
    const auto side = static_cast<std::uint64_t>(2 * cr.height + 1);
    std::uint64_t monic_total = 1;
    for (int i = 0; i < cr.degree; ++i) monic_total *= side;
    const std::uint64_t expect =
        cr.monic ? monic_total : monic_total * side - monic_total;
    if (cr.total() != expect) pass = false;
  }
  CriterionResult r;
  r.index = 8;
  r.name = "counting-identities";
  r.passed = pass;
  r.detail = std::to_string(all.size()) +
             " count runs, totals match the box counts exactly";
  return r;
}

CriterionResult normalization_criterion(const VerifyOptions& opt) {
  bool pass = true;
  for (int d : {2, 5, 8}) {
    RunConfig cfg;
    cfg.degree = d;
    cfg.samples = 50000;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    const double box = std::ldexp(1.0, d);
    for (int family = 0; family < 2; ++family) {
      Estimate e = family == 0 ? mc_star(cfg) : mc_plus(cfg);
      double sum = 0.0;
      for (double m : e.mean) sum += m;
      if (sum != box) pass = false;
    }
  }
  CriterionResult r;
  r.index = 9;
  r.name = "normalization-exact";
  r.passed = pass;
  r.detail = "ascending sums of star and plus means equal 2^d to the last "
             "bit for d in {2,5,8}";
  return r;
}

CriterionResult oracle_criterion(const VerifyOptions& opt) {
  bool pass = true;

  // Closed-form quadratic-pair resultant against the exact determinant.
  Xoshiro256pp rng(derive_substream_seed(opt.seed, 0x720e5u));
  double worst_res = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double y1 = rng.uniform(-2.0, 2.0), z1 = rng.uniform(-2.0, 2.0);
    const double y2 = rng.uniform(-2.0, 2.0), z2 = rng.uniform(-2.0, 2.0);
    const double cf = quad_resultant(y1, z1, y2, z2);
    ExactPolynomial q1({mpq_class(y1 * y1 + z1 * z1), mpq_class(-2.0 * y1),
                        mpq_class(1)});
    ExactPolynomial q2({mpq_class(y2 * y2 + z2 * z2), mpq_class(-2.0 * y2),
                        mpq_class(1)});
    const double ex = resultant(q1, q2).get_d();
    const double rel = std::fabs(cf - ex) / std::max(1.0, std::fabs(ex));
    if (rel > worst_res) worst_res = rel;
  }
  if (worst_res > 1e-12) pass = false;

  // Float classifier against the exact one on every integer polynomial of
  // degree <= 3 with coefficients in [-2, 2].
  std::uint64_t total = 0, rejects = 0, mismatches = 0;
  for (int d = 1; d <= 3; ++d) {
    std::vector<long> v(static_cast<std::size_t>(d) + 1, -2);
    while (true) {
      if (v[static_cast<std::size_t>(d)] != 0) {
        ++total;
        Signature se =
            signature_exact(ExactPolynomial::from_int_coeffs(v));
        FloatPolynomial fp;
        fp.coeffs.assign(v.begin(), v.end());
        auto sf = signature_float(fp);
        if (!sf) {
          ++rejects;
        } else if (*sf != se) {
          ++mismatches;
        }
      }
      std::size_t k = 0;
      while (k < v.size() && v[k] == 2) v[k++] = -2;
      if (k == v.size()) break;
      ++v[k];
    }
  }
  if (mismatches != 0) pass = false;
  if (static_cast<double>(rejects) >
      1e-3 * static_cast<double>(total)) pass = false;

  // Symmetric-function recurrence against exhaustive subset sums.
  double worst_sym = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<double> vals(n);
      for (auto& x : vals) x = rng.uniform(-2.0, 2.0);
      for (std::size_t j = 0; j <= n; ++j) {
        const double got = elementary_symmetric(vals, j);
        double want = 0.0, scale = 0.0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          if (static_cast<std::size_t>(std::popcount(mask)) != j) continue;
          double prod = 1.0;
          for (std::size_t b = 0; b < n; ++b) {
            if (mask & (1u << b)) prod *= vals[b];
          }
          want += prod;
          scale += std::fabs(prod);
        }
        const double rel =
            std::fabs(got - want) / std::max(1.0, scale);
        if (rel > worst_sym) worst_sym = rel;
      }
    }
  }
  if (worst_sym > 1e-12) pass = false;

  CriterionResult r;
  r.index = 10;
  r.name = "oracle-equivalence";
  r.passed = pass;
  r.detail = "resultant rel dev " + format_real(worst_res) + "; " +
             std::to_string(mismatches) + " mismatches and " +
             std::to_string(rejects) + " rejects over " +
             std::to_string(total) + " integer polynomials; symmetric rel "
             "dev " + format_real(worst_sym);
  return r;
}

// One pass of a representative pipeline, rendered through the output module.
std::string determinism_probe(const VerifyOptions& opt) {
  std::ostringstream ss;
  ss << csv_header() << '\n';

  RunConfig cfg;
  cfg.degree = 3;
  cfg.samples = 20000;
  cfg.seed = opt.seed;
  cfg.workers = opt.workers;
  Estimate st = mc_star(cfg);
  for (std::size_t s = 0; s < st.mean.size(); ++s) {
    OutputRecord rec;
    rec.command = "mc-star";
    rec.degree = 3;
    rec.nonreal_pairs = static_cast<int>(s);
    rec.value = st.mean[s];
    rec.std_error = st.std_error[s];
    rec.samples = st.samples;
    rec.seed = st.seed;
    rec.discarded = st.discarded;
    ss << to_csv_row(rec) << '\n';
  }

  cfg.degree = 2;
  Estimate pl = mc_plus(cfg);
  for (std::size_t s = 0; s < pl.mean.size(); ++s) {
    OutputRecord rec;
    rec.command = "mc-plus";
    rec.degree = 2;
    rec.nonreal_pairs = static_cast<int>(s);
    rec.value = pl.mean[s];
    rec.std_error = pl.std_error[s];
    rec.samples = pl.samples;
    rec.seed = pl.seed;
    rec.discarded = pl.discarded;
    ss << to_csv_row(rec) << '\n';
  }

  LatticeOptions lopt;
  lopt.workers = opt.workers;
  CountResult cr = count_exact(2, 2, lopt);
  std::vector<OutputRecord> recs;
  for (std::size_t s = 0; s < cr.counts.size(); ++s) {
    OutputRecord rec;
    rec.command = "count";
    rec.degree = 2;
    rec.nonreal_pairs = static_cast<int>(s);
    rec.value = static_cast<double>(cr.counts[s]);
    rec.height = 2.0;
    recs.push_back(rec);
  }

  StarEvalFn fn = [](double b) { return StarEval{star_area_d2(1, b), 0.0}; };
  QuadratureResult q = plus_from_star_quadrature(2, 1, fn, 1e-9);
  OutputRecord qr;
  qr.command = "quad";
  qr.degree = 2;
  qr.nonreal_pairs = 1;
  qr.value = q.value;
  qr.std_error = q.error_bound;
  qr.samples = q.evaluations;
  recs.push_back(qr);

  cfg.degree = 2;
  ScalarEstimate root = mc_rootspace(2, 1, 1.0, cfg);
  OutputRecord rr;
  rr.command = "mc-root";
  rr.degree = 2;
  rr.nonreal_pairs = 1;
  rr.value = root.value;
  rr.std_error = root.std_error;
  rr.samples = root.samples;
  rr.seed = root.seed;
  rr.discarded = root.discarded;
  recs.push_back(rr);

  ss << to_json(recs);
  return ss.str();
}

CriterionResult determinism_criterion(const VerifyOptions& opt) {
  const std::string a = determinism_probe(opt);
  const std::string b = determinism_probe(opt);
  CriterionResult r;
  r.index = 11;
  r.name = "output-determinism";
  r.passed = !a.empty() && a == b;
  r.detail = "two pipeline passes rendered " + std::to_string(a.size()) +
             " bytes, byte-identical: " + (a == b ? "yes" : "NO");
  return r;
}

}  // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& opt,
                                              std::ostream& out) {
  std::vector<CriterionResult> results;
  auto emit = [&](CriterionResult r) {
    out << (r.passed ? "PASS " : "FAIL ") << r.index << ' ' << r.name << ": "
        << r.detail << '\n';
    out.flush();
    results.push_back(std::move(r));
  };

  emit(constants_criterion(1, "monic-d2-constants", 2, false, 5.0, opt));
  emit(constants_criterion(2, "monic-d3-constants", 3, false, 0.0, opt));
  emit(constants_criterion(3, "poslead-d2-constants", 2, true, 0.0, opt));
  emit(reference_tables_criterion(opt));
  emit(rootspace_criterion(opt));
  emit(quadrature_criterion(opt));
  std::vector<CountResult> count_runs;
  emit(asymptotics_criterion(opt, count_runs));
  emit(identities_criterion(opt, count_runs));
  emit(normalization_criterion(opt));
  emit(oracle_criterion(opt));
  emit(determinism_criterion(opt));
  return results;
}

}  // namespace sigvol
