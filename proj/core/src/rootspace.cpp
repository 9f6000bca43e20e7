/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/rootspace.hpp"

#include <cmath>
#include <stdexcept>

namespace sigvol {

double elementary_symmetric(const std::vector<double>& values, std::size_t j) {
  if (j > values.size()) {
    throw std::out_of_range("elementary_symmetric: j exceeds value count");
  }
  if (j == 0) return 1.0;
  // e[k] after processing m values holds S_k of those m values.
  std::vector<double> e(j + 1, 0.0);
  e[0] = 1.0;
  std::size_t seen = 0;
  for (double v : values) {
    ++seen;
    std::size_t top = seen < j ? seen : j;
    for (std::size_t k = top; k >= 1; --k) {
      e[k] += v * e[k - 1];
    }
  }
  return e[j];
}

FloatPolynomial monic_from_roots(const RootTuple& t) {
  // Ascending coefficients, starting from the constant polynomial 1.
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(t.degree()) + 1);
  c.push_back(1.0);
  for (double x : t.x) {
    // Multiply by (X - x).
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
      c[k] = c[k - 1] - x * c[k];
    }
    c[0] = -x * c[0];
  }
  for (const auto& [y, z] : t.yz) {
    // Multiply by X^2 - 2y X + (y^2 + z^2).
    const double b = -2.0 * y;
    const double a = y * y + z * z;
    c.push_back(0.0);
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k >= 2; --k) {
      c[k] = c[k - 2] + b * c[k - 1] + a * c[k];
    }
    c[1] = b * c[0] + a * c[1];
    c[0] = a * c[0];
  }
  FloatPolynomial p;
  p.coeffs = std::move(c);
  return p;
}

double quad_resultant(double yj, double zj, double yk, double zk) {
  const double dy = yj - yk;
  const double dz = zj - zk;
  const double sz = zj + zk;
  return (dy * dy + dz * dz) * (dy * dy + sz * sz);
}

double jacobian_weight(const RootTuple& t) {
  double w = 1.0;
  const std::size_t r = t.x.size();
  const std::size_t s = t.yz.size();
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = j + 1; k < r; ++k) {
      w *= t.x[j] - t.x[k];
    }
  }
  w = std::fabs(w);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = j + 1; k < s; ++k) {
      w *= quad_resultant(t.yz[j].first, t.yz[j].second, t.yz[k].first,
                          t.yz[k].second);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const double dx = t.x[i] - t.yz[j].first;
      w *= dx * dx + t.yz[j].second * t.yz[j].second;
    }
  }
  for (std::size_t j = 0; j < s; ++j) {
    w *= std::fabs(t.yz[j].second);
  }
  return w;
}

bool in_region(const RootTuple& t, const RegionSpec& spec) {
  if (t.degree() != spec.degree ||
      static_cast<int>(t.yz.size()) != spec.nonreal_pairs) {
    throw std::invalid_argument("in_region: tuple does not match region spec");
  }
  for (const auto& [y, z] : t.yz) {
    (void)y;
    if (z == 0.0) return false;
  }
  const FloatPolynomial p = monic_from_roots(t);
  for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
    if (std::fabs(p.coeffs[i]) > spec.height) return false;
  }
  return true;
}

}  // namespace sigvol
