/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_SRC_FLOAT_STURM_HPP
#define SIGVOL_SRC_FLOAT_STURM_HPP

#include <optional>

#include "sigvol/poly.hpp"

namespace sigvol::detail {

// Floating-point signature classifier with reusable buffers, the hot loop
// of the Monte Carlo estimators. Each chain element is rescaled to a
// power-of-two max-norm in [1,2) (exact, sign-preserving), and every
// division tracks the magnitude of its intermediates as a running scale m:
//
//  - remainder leading coefficients within 64 machine epsilons of zero
//    relative to m are rounding debris and are stripped;
//  - a remainder that strips to nothing means the division came out exact,
//    so the chain has reached a genuine gcd: the input lies on the
//    degenerate surface and is classified through the gcd recursion
//    (real roots of p = distinct real roots of p + real roots of
//    gcd(p, p'), multiplicities shifting down by one);
//  - a surviving leading coefficient below eps * m is too close to zero to
//    trust but too far to snap: the draw sits near the surface, and the
//    classification is abandoned (REJECT) rather than guessed.
class FloatSturm {
public:
  // coeffs[0..n-1] ascending. Returns the signature, or std::nullopt for
  // REJECT. Throws std::invalid_argument on NaN/inf/empty input.
  std::optional<Signature> classify(const double* coeffs, int n, double eps);

private:
  std::vector<double> a_, b_, r_;
};

}  // namespace sigvol::detail

#endif
