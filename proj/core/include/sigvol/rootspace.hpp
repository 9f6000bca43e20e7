/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_ROOTSPACE_HPP
#define SIGVOL_ROOTSPACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sigvol/poly.hpp"

namespace sigvol {

// A point in root coordinates: r real roots x_i and s conjugate pairs
// y_j +- i z_j. Membership in a signature region additionally requires
// every z_j != 0.
struct RootTuple {
  std::vector<double> x;
  std::vector<std::pair<double, double>> yz;

  int degree() const {
    return static_cast<int>(x.size() + 2 * yz.size());
  }
};

// Region of root tuples whose monic polynomial has height at most B and
// exactly s non-real pairs.
struct RegionSpec {
  int degree = 0;
  int nonreal_pairs = 0;
  double height = 1.0;
};

// Elementary symmetric polynomial S_j of the given values, S_0 = 1.
// One-pass O(n j) recurrence, one value multiplied in at a time.
// Throws std::out_of_range if j > n.
double elementary_symmetric(const std::vector<double>& values, std::size_t j);

// Monic polynomial with the tuple's roots, expanded over the reals as a
// product of linear factors (X - x_i) and quadratic factors
// X^2 - 2 y_j X + (y_j^2 + z_j^2). No complex arithmetic, so coefficients
// are real by construction rather than by rounding.
FloatPolynomial monic_from_roots(const RootTuple& t);

// Resultant of the two quadratic factors attached to (yj, zj) and (yk, zk),
// in closed form ((yj-yk)^2 + (zj-zk)^2) ((yj-yk)^2 + (zj+zk)^2). Always
// nonnegative; zero iff the factors coincide as polynomials.
double quad_resultant(double yj, double zj, double yk, double zk);

// Change-of-variables density from root coordinates to coefficients:
// |prod_{j<k}(x_j-x_k)| * prod_{j<k} Res(R_j,R_k) * prod_{i,j} R_j(x_i)
// * prod_j |z_j|, empty products being 1. Nonnegative; vanishes only when
// two real roots coincide, two quadratic factors coincide, or some z_j = 0.
double jacobian_weight(const RootTuple& t);

// True iff all z_j != 0 and every coefficient of monic_from_roots(t) below
// the leading one has absolute value at most spec.height.
// Throws std::invalid_argument if t is not dimensioned for spec.
bool in_region(const RootTuple& t, const RegionSpec& spec);

}  // namespace sigvol

#endif
