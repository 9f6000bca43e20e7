/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "sigvol/estimate.hpp"

namespace sigvol {
namespace {

constexpr double kClampU = 1e-6;
constexpr int kMaxDepth = 48;

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

struct Integrand {
  const StarEvalFn* fn;
  int degree;
  std::uint64_t evaluations = 0;
  std::uint64_t max_evals;

  // F(u) = u^d * star(1/u), with the argument clamped away from zero so the
  // star evaluation never sees an unbounded height. Returns the value and
  // the propagated evaluation error.
  StarEval eval(double u) {
    const double v = u < kClampU ? kClampU : u;
    const StarEval se = (*fn)(1.0 / v);
    ++evaluations;
    const double p = ipow(v, degree);
    return {p * se.value, p * se.error};
  }

  bool exhausted() const { return evaluations >= max_evals; }
};

struct Piece {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

double simpson(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson with the standard S2 + (S2-S1)/15 acceptance, plus a
// noise floor: an interval whose defect is already below the propagated
// evaluation error of its nodes cannot be improved by refinement, so it is
// accepted at the noise level instead of being split forever.
Piece refine(Integrand& f, double a, double b, StarEval fa, StarEval fm,
             StarEval fb, double s1, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const StarEval flm = f.eval(lm);
  const StarEval frm = f.eval(rm);
  const double sl = simpson(m - a, fa.value, flm.value, fm.value);
  const double sr = simpson(b - m, fm.value, frm.value, fb.value);
  const double s2 = sl + sr;
  const double defect = std::fabs(s2 - s1);
  // Composite Simpson applied to the per-node error bounds.
  const double noise = simpson(m - a, fa.error, flm.error, fm.error) +
                       simpson(b - m, fm.error, frm.error, fb.error);

  if (defect <= 15.0 * tol || defect <= 3.0 * noise) {
    return {s2 + (s2 - s1) / 15.0, defect / 15.0 + noise, true};
  }
  if (depth >= kMaxDepth || f.exhausted()) {
    return {s2 + (s2 - s1) / 15.0, defect / 15.0 + noise, false};
  }
  Piece left = refine(f, a, m, fa, flm, fm, sl, 0.5 * tol, depth + 1);
  Piece right = refine(f, m, b, fm, frm, fb, sr, 0.5 * tol, depth + 1);
  return {left.value + right.value, left.error + right.error,
          left.converged && right.converged};
}

}  // namespace

QuadratureResult plus_from_star_quadrature(int degree, int nonreal_pairs,
                                           const StarEvalFn& star_eval,
                                           double tol,
                                           std::uint64_t max_evals) {
  if (degree < 1) throw std::invalid_argument("quadrature: degree must be >= 1");
  if (nonreal_pairs < 0 || 2 * nonreal_pairs > degree) {
    throw std::invalid_argument("quadrature: invalid signature");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature: tol must be > 0");
  if (!star_eval) throw std::invalid_argument("quadrature: missing evaluator");

  Integrand f{&star_eval, degree, 0, max_evals};
  const StarEval fa = f.eval(0.0);
  const StarEval fb = f.eval(1.0);
  const StarEval fm = f.eval(0.5);
  const double s1 = simpson(1.0, fa.value, fm.value, fb.value);
  Piece p = refine(f, 0.0, 1.0, fa, fm, fb, s1, tol, 0);

  QuadratureResult out;
  out.value = p.value;
  out.error_bound = p.error;
  out.evaluations = f.evaluations;
  out.converged = p.converged;
  return out;
}

}  // namespace sigvol
