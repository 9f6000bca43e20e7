/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_REFERENCE_HPP
#define SIGVOL_REFERENCE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sigvol {

// A signature-region volume known in closed form: rational + log_coeff *
// log(log_argument). Stored symbolically and evaluated on demand in
// 256-bit arithmetic, so tests get 30+ correct digits instead of a double
// literal's 17.
struct ExactConstant {
  int degree = 0;
  int nonreal_pairs = 0;
  // False for the monic family, true for the positive-lead family.
  bool plus_family = false;
  mpq_class rational;
  mpq_class log_coeff;
  unsigned long log_argument = 1;
  std::string symbolic;

  double value() const;
  // Decimal expansion with the given number of significant digits.
  std::string decimal(int digits = 40) const;
};

// The six known closed-form region volumes: monic d=2 (13/6 and 11/6),
// monic d=3 (766/1215 +- log(3)/6 companions), positive-lead d=2
// (41/18 + log(2)/3 and 31/18 - log(2)/3).
std::vector<ExactConstant> exact_constants();

// Closed-form area of the degree-2 monic signature regions at height B:
// the s=1 region {p_1^2 < 4 p_0, |p_i| <= B} has area 2B^2 - B^3/6 for
// B <= 4 and (8/3) B^{3/2} for B > 4 (the parabola leaves the box at
// B = 4; both branches give 64/3 there); s=0 is its complement in the
// 4B^2 box. Throws std::domain_error for B < 1.
double star_area_d2(int nonreal_pairs, double height);

// d(d+1)+1: a degree-d algebraic surface meets any axis-parallel line in
// at most this many intervals, the constant behind the O(B^d) lattice
// error term.
long davenport_h(int degree);

}  // namespace sigvol

#endif
