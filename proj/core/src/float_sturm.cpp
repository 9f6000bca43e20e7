/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "float_sturm.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace sigvol::detail {
namespace {

constexpr double kSnapFactor = 64.0 * DBL_EPSILON;

// Rescales to max-norm in [1,2) by an exact power of two. Signs and zero
// patterns are untouched, so Sturm sign sequences are unaffected.
void normalize(std::vector<double>& p, int n) {
  double maxc = 0.0;
  for (int i = 0; i < n; ++i) {
    double m = std::fabs(p[static_cast<std::size_t>(i)]);
    if (m > maxc) maxc = m;
  }
  if (maxc == 0.0) return;
  int e = std::ilogb(maxc);
  if (e == 0) return;
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] =
        std::ldexp(p[static_cast<std::size_t>(i)], -e);
  }
}

struct EndVariations {
  int last_neg = 0, last_pos = 0;
  int var_neg = 0, var_pos = 0;

  void emit(double lc, int deg) {
    int sp = lc > 0.0 ? 1 : -1;
    int sn = (deg & 1) ? -sp : sp;
    if (last_pos != 0 && sp != last_pos) ++var_pos;
    if (last_neg != 0 && sn != last_neg) ++var_neg;
    last_pos = sp;
    last_neg = sn;
  }

  int distinct() const { return var_neg - var_pos; }
};

}  // namespace

std::optional<Signature> FloatSturm::classify(const double* coeffs, int n,
                                              double eps) {
  if (n <= 0) throw std::invalid_argument("signature_float: empty polynomial");
  double maxc = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(coeffs[i])) {
      throw std::invalid_argument("signature_float: non-finite coefficient");
    }
    double m = std::fabs(coeffs[i]);
    if (m > maxc) maxc = m;
  }
  const int degree = n - 1;
  if (maxc == 0.0 || std::fabs(coeffs[degree]) <= eps * maxc) {
    // Leading coefficient is indistinguishable from zero at this scale.
    return std::nullopt;
  }
  if (degree == 0) return Signature{0, 0};

  a_.assign(coeffs, coeffs + n);
  int deg_a = degree;
  normalize(a_, deg_a + 1);

  int total_r = 0;
  // Outer gcd recursion: each pass counts the distinct real roots of the
  // current polynomial, then descends into gcd(p, p').
  while (deg_a >= 1) {
    EndVariations ends;
    ends.emit(a_[static_cast<std::size_t>(deg_a)], deg_a);

    // b = a', normalized.
    int deg_b = deg_a - 1;
    b_.resize(static_cast<std::size_t>(deg_b) + 1);
    for (int i = 0; i < deg_a; ++i) {
      b_[static_cast<std::size_t>(i)] =
          a_[static_cast<std::size_t>(i) + 1] * (i + 1);
    }
    normalize(b_, deg_b + 1);
    ends.emit(b_[static_cast<std::size_t>(deg_b)], deg_b);

    int gcd_degree = -1;
    while (true) {
      if (deg_b == 0) {
        // Constant divisor: the next remainder is identically zero.
        gcd_degree = 0;
        break;
      }
      // r = a mod b by synthetic division.
      r_.assign(a_.begin(), a_.begin() + deg_a + 1);
      const double lcb = b_[static_cast<std::size_t>(deg_b)];
      double maxq = 1.0;
      for (int k = deg_a - deg_b; k >= 0; --k) {
        double q = r_[static_cast<std::size_t>(k + deg_b)] / lcb;
        double aq = std::fabs(q);
        if (aq > maxq) maxq = aq;
        for (int j = 0; j < deg_b; ++j) {
          r_[static_cast<std::size_t>(k + j)] -=
              q * b_[static_cast<std::size_t>(j)];
        }
      }
      const double scale = 2.0 * maxq;
      int deg_r = deg_b - 1;
      while (deg_r >= 0 &&
             std::fabs(r_[static_cast<std::size_t>(deg_r)]) <= kSnapFactor * scale) {
        --deg_r;
      }
      if (deg_r < 0) {
        // Exact division: b is the gcd, already emitted.
        gcd_degree = deg_b;
        break;
      }
      if (std::fabs(r_[static_cast<std::size_t>(deg_r)]) < eps * scale) {
        return std::nullopt;
      }
      for (int i = 0; i <= deg_r; ++i) {
        r_[static_cast<std::size_t>(i)] = -r_[static_cast<std::size_t>(i)];
      }
      normalize(r_, deg_r + 1);
      a_.swap(b_);
      b_.swap(r_);
      deg_a = deg_b;
      deg_b = deg_r;
      ends.emit(b_[static_cast<std::size_t>(deg_b)], deg_b);
    }

    total_r += ends.distinct();
    if (gcd_degree == 0) break;
    // Descend into the gcd (currently in b_).
    a_.swap(b_);
    deg_a = gcd_degree;
  }

  if (total_r < 0 || total_r > degree || ((degree - total_r) & 1)) {
    // Numerically inconsistent chain; do not guess.
    return std::nullopt;
  }
  return Signature{total_r, (degree - total_r) / 2};
}

}  // namespace sigvol::detail

namespace sigvol {

std::optional<Signature> signature_float(const FloatPolynomial& p, double eps) {
  thread_local detail::FloatSturm workspace;
  return workspace.classify(p.coeffs.data(), static_cast<int>(p.coeffs.size()),
                            eps);
}

}  // namespace sigvol
