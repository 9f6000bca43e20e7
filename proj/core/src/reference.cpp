/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/reference.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sigvol {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

// value = rational + log_coeff * log(log_argument), evaluated at 256-bit
// precision and rounded once at the end.
void eval_constant(mpfr_t out, const ExactConstant& c) {
  mpfr_set_q(out, c.rational.get_mpq_t(), MPFR_RNDN);
  if (c.log_coeff != 0) {
    mpfr_t lg, term;
    mpfr_init2(lg, kPrecision);
    mpfr_init2(term, kPrecision);
    mpfr_set_ui(lg, c.log_argument, MPFR_RNDN);
    mpfr_log(lg, lg, MPFR_RNDN);
    mpfr_set_q(term, c.log_coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, lg, MPFR_RNDN);
    mpfr_add(out, out, term, MPFR_RNDN);
    mpfr_clear(term);
    mpfr_clear(lg);
  }
}

}  // namespace

double ExactConstant::value() const {
  mpfr_t v;
  mpfr_init2(v, kPrecision);
  eval_constant(v, *this);
  double r = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return r;
}

std::string ExactConstant::decimal(int digits) const {
  if (digits < 1 || digits > 70) {
    throw std::invalid_argument("decimal: digits must be in [1, 70]");
  }
  mpfr_t v;
  mpfr_init2(v, kPrecision);
  eval_constant(v, *this);
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v);
  mpfr_clear(v);
  return std::string(buf);
}

std::vector<ExactConstant> exact_constants() {
  std::vector<ExactConstant> t;
  t.push_back({2, 0, false, mpq_class(13, 6), mpq_class(0), 1,
               "13/6"});
  t.push_back({2, 1, false, mpq_class(11, 6), mpq_class(0), 1,
               "11/6"});
  t.push_back({3, 0, false, mpq_class(766, 1215), mpq_class(1, 6), 3,
               "766/1215 + log(3)/6"});
  t.push_back({3, 1, false, mpq_class(8954, 1215), mpq_class(-1, 6), 3,
               "8954/1215 - log(3)/6"});
  t.push_back({2, 0, true, mpq_class(41, 18), mpq_class(1, 3), 2,
               "41/18 + log(2)/3"});
  t.push_back({2, 1, true, mpq_class(31, 18), mpq_class(-1, 3), 2,
               "31/18 - log(2)/3"});
  return t;
}

// Area within [-B, B]^2 of the monic quadratics X^2 + p1 X + p0 by sign of
// the discriminant p1^2 - 4 p0. Two non-real roots need p0 > p1^2 / 4; the
// parabola leaves the box through the top once B > 4.
double star_area_d2(int nonreal_pairs, double height) {
  if (height < 1.0) {
    throw std::domain_error("star_area_d2: height must be >= 1");
  }
  if (nonreal_pairs < 0 || nonreal_pairs > 1) {
    throw std::domain_error("star_area_d2: signature out of range");
  }
  const double B = height;
  double area_s1;
  if (B <= 4.0) {
    area_s1 = 2.0 * B * B - B * B * B / 6.0;
  } else {
    area_s1 = (8.0 / 3.0) * B * std::sqrt(B);
  }
  if (nonreal_pairs == 1) return area_s1;
  return 4.0 * B * B - area_s1;
}

long davenport_h(int degree) {
  if (degree < 1) throw std::domain_error("davenport_h: degree must be >= 1");
  return static_cast<long>(degree) * (degree + 1) + 1;
}

}  // namespace sigvol
