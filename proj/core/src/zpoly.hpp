/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_SRC_ZPOLY_HPP
#define SIGVOL_SRC_ZPOLY_HPP

// Internal integer-polynomial engine behind the exact public operations.
// Polynomials are dense mpz coefficient vectors, ascending, trimmed so that
// back() != 0; the zero polynomial is the empty vector. Chain elements are
// kept primitive (positive content divided out, signs untouched) to stop
// pseudo-remainder coefficient growth.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace sigvol::detail {

using ZPoly = std::vector<mpz_class>;

inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p);
void zderivative(const ZPoly& p, ZPoly& out);

// Divides out the content (gcd of coefficients, taken positive), so signs
// are preserved. No-op on the zero polynomial.
void zprimitive(ZPoly& p);

// Exact quotient num / den in Z[x]; den must divide num exactly.
void zdivexact(const ZPoly& num, const ZPoly& den, ZPoly& quot);

// Primitive gcd with positive leading coefficient; zgcd(a, 0) = +-a made
// primitive and positive.
void zgcd(const ZPoly& a, const ZPoly& b, ZPoly& g);

// Sign of p(u/v) for v > 0, via homogeneous Horner evaluation (no
// rationals materialized). Returns -1, 0 or 1.
int zsign_at_rational(const ZPoly& p, const mpz_class& u, const mpz_class& v);

// Negated-pseudo-remainder chain f0 = p, f1 = p', f_{i+1} =
// primitive(-(f_{i-1} mod f_i)), with the pseudo-division multiplier's sign
// compensated so each step behaves as division by a positive constant.
// Ends at the last nonzero element, which is gcd(p, p') up to constant.
// The sign-variation difference of this chain between two non-root points
// counts the distinct real roots in between whether or not p is squarefree
// (dividing every element by the gcd's value at the evaluation point leaves
// variations unchanged).
class SturmChain {
public:
  // p must be nonzero with degree >= 1. Reuses internal storage across
  // calls; the chain stays valid until the next build().
  void build(const ZPoly& p);

  int length() const { return length_; }
  const ZPoly& element(int i) const { return elems_[i]; }
  const ZPoly& last() const { return elems_[length_ - 1]; }

  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  // x = u/v, v > 0; x must not be a root of the first element.
  int variations_at(const mpz_class& u, const mpz_class& v) const;

private:
  std::vector<ZPoly> elems_;
  int length_ = 0;
  mpz_class t0_, t1_;  // pseudo-division scratch
};

// Multiplicity-weighted count of real roots: each pass over the chain adds
// the distinct-root count of the current polynomial and then recurses into
// gcd(p, p'), which carries every root with multiplicity one less.
// Consumes p (used as scratch storage).
int zreal_roots_with_multiplicity(ZPoly& p, SturmChain& chain);

// Reusable exact classifier for enumeration loops: converts small integer
// coefficient vectors straight into chain storage, no per-call allocation
// after warmup. Returns s, the number of non-real root pairs counted with
// multiplicity.
class ExactClassifier {
public:
  int classify(const long long* coeffs, int degree);

private:
  SturmChain chain_;
  ZPoly p_;
};

}  // namespace sigvol::detail

#endif
