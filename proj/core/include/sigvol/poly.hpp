/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_POLY_HPP
#define SIGVOL_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace sigvol {

// Classification of a degree-d real polynomial by its roots, counted with
// multiplicity: real_roots + 2 * nonreal_pairs == d always.
struct Signature {
  int real_roots = 0;     // r
  int nonreal_pairs = 0;  // s

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.real_roots == b.real_roots && a.nonreal_pairs == b.nonreal_pairs;
  }
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }
};

// Dense polynomial over the rationals. coeffs()[i] is the coefficient of
// X^i; the highest index is nonzero unless the polynomial is zero, which is
// represented by an empty vector. All arithmetic is exact.
class ExactPolynomial {
public:
  ExactPolynomial() = default;
  // Trims leading zeros; canonicalizes every coefficient.
  explicit ExactPolynomial(std::vector<mpq_class> coeffs);
  static ExactPolynomial from_int_coeffs(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& leading_coeff() const { return coeffs_.back(); }

  ExactPolynomial derivative() const;
  mpq_class eval(const mpq_class& x) const;

  ExactPolynomial operator+(const ExactPolynomial& other) const;
  ExactPolynomial operator-(const ExactPolynomial& other) const;
  ExactPolynomial operator*(const ExactPolynomial& other) const;
  ExactPolynomial operator*(const mpq_class& c) const;

private:
  std::vector<mpq_class> coeffs_;
};

// Dense polynomial over doubles, same indexing convention. Carrier for
// sampled coefficient vectors; all entries must be finite.
struct FloatPolynomial {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct SquarefreeFactor {
  ExactPolynomial factor;
  int multiplicity = 1;
};

// Factors are squarefree, pairwise coprime, listed in increasing
// multiplicity; their product with multiplicities equals the input up to a
// nonzero rational constant.
using SquarefreeFactorization = std::vector<SquarefreeFactor>;

// Number of distinct real roots of a squarefree p in the open interval
// (a, b), where an empty optional stands for -inf / +inf. Throws
// std::invalid_argument if p is not squarefree, if degree(p) < 1, if
// a >= b, or if the right endpoint is a root (a left endpoint root is
// harmless: it is excluded from the open count by construction).
int sturm_count(const ExactPolynomial& p,
                const std::optional<mpq_class>& a,
                const std::optional<mpq_class>& b);

// Distinct real roots over the whole line.
int sturm_count(const ExactPolynomial& p);

// Yun decomposition. Throws std::invalid_argument on the zero polynomial.
SquarefreeFactorization squarefree_decomposition(const ExactPolynomial& p);

// Exact signature: r is the multiplicity-weighted count of real roots, so
// r + 2s = degree holds identically, multiple roots included. Throws
// std::invalid_argument for constant or zero input.
Signature signature_exact(const ExactPolynomial& p);

// Floating-point signature with a rejection guard. Returns std::nullopt
// (REJECT rather than a low-confidence answer) when a Sturm chain leading
// coefficient falls below eps times the running coefficient scale, which
// signals that the input is too close to the discriminant surface for
// double precision to classify; callers resample. Remainders whose every
// coefficient sits at rounding-noise level are snapped to zero and the
// input is classified through the gcd, so points on the surface itself
// come back exact; an input within rounding noise of the surface, but not
// on it, receives the surface classification instead of REJECT. Throws
// std::invalid_argument on NaN or infinite coefficients, or on empty
// input.
std::optional<Signature> signature_float(const FloatPolynomial& p,
                                         double eps = 1e-12);

// Res(p, q), exact. Zero if either polynomial is zero.
mpq_class resultant(const ExactPolynomial& p, const ExactPolynomial& q);

// D = (-1)^{d(d-1)/2} Res(p, p') / lc(p). Zero iff p has a multiple root.
// Throws std::invalid_argument for degree < 2.
mpq_class discriminant(const ExactPolynomial& p);

// 1 + max_{i<d} |p_i / p_d|; every root has modulus strictly below this.
// Throws std::invalid_argument for the zero polynomial.
mpq_class cauchy_bound(const ExactPolynomial& p);
double cauchy_bound(const FloatPolynomial& p);

}  // namespace sigvol

#endif
