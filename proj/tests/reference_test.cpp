/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"

namespace {

const sigvol::ExactConstant& find_constant(int degree, int s, bool plus) {
  static const auto all = sigvol::exact_constants();
  for (const auto& c : all)
    if (c.degree == degree && c.nonreal_pairs == s && c.plus_family == plus)
      return c;
  FAIL("missing constant");
  static sigvol::ExactConstant dummy;
  return dummy;
}

}  // namespace

TEST_CASE("the six closed-form constants") {
  auto all = sigvol::exact_constants();
  REQUIRE(all.size() == 6);

  struct Expected {
    int degree;
    int s;
    bool plus;
    // 30 significant digits, computed independently in high precision.
    const char* decimal30;
    double value;
  };
  const Expected table[] = {
      {2, 0, false, "2.16666666666666666666666666667", 2.1666666666666665},
      {2, 1, false, "1.83333333333333333333333333333", 1.8333333333333333},
      {3, 0, false, "0.813554723008470956796326881051", 0.813554723008471},
      {3, 1, false, "7.18644527699152904320367311895", 7.186445276991529},
      {2, 0, true, "2.50882683796442621425018848493", 2.5088268379644263},
      {2, 1, true, "1.49117316203557378574981151507", 1.4911731620355737},
  };
  for (const auto& e : table) {
    const auto& c = find_constant(e.degree, e.s, e.plus);
    CHECK(c.decimal(30) == e.decimal30);
    CHECK(c.value() == e.value);
    CHECK_FALSE(c.symbolic.empty());
  }

  // Rational parts and log coefficients, exactly.
  CHECK(find_constant(2, 0, false).rational == mpq_class(13, 6));
  CHECK(find_constant(2, 0, false).log_coeff == 0);
  CHECK(find_constant(2, 1, false).rational == mpq_class(11, 6));
  CHECK(find_constant(3, 0, false).rational == mpq_class(766, 1215));
  CHECK(find_constant(3, 0, false).log_coeff == mpq_class(1, 6));
  CHECK(find_constant(3, 0, false).log_argument == 3);
  CHECK(find_constant(3, 1, false).rational == mpq_class(8954, 1215));
  CHECK(find_constant(3, 1, false).log_coeff == mpq_class(-1, 6));
  CHECK(find_constant(2, 0, true).rational == mpq_class(41, 18));
  CHECK(find_constant(2, 0, true).log_coeff == mpq_class(1, 3));
  CHECK(find_constant(2, 0, true).log_argument == 2);
  CHECK(find_constant(2, 1, true).rational == mpq_class(31, 18));
  CHECK(find_constant(2, 1, true).log_coeff == mpq_class(-1, 3));
}

TEST_CASE("constants close their boxes exactly") {
  // Each family partitions the box of volume 2^d, so the pair sums are
  // rational: the log parts cancel term by term.
  auto pair_sum = [](int degree, bool plus) {
    const auto& a = find_constant(degree, 0, plus);
    const auto& b = find_constant(degree, 1, plus);
    CHECK(a.log_coeff + b.log_coeff == 0);
    CHECK((a.log_coeff == 0 || a.log_argument == b.log_argument));
    return a.rational + b.rational;
  };
  CHECK(pair_sum(2, false) == 4);
  CHECK(pair_sum(3, false) == 8);
  CHECK(pair_sum(2, true) == 4);
}

TEST_CASE("decimal digit bounds") {
  const auto& c = find_constant(2, 0, false);
  CHECK(c.decimal(1) == "2");
  CHECK(c.decimal().size() >= 40);
  CHECK_THROWS_AS((void)c.decimal(0), std::invalid_argument);
  CHECK_THROWS_AS((void)c.decimal(71), std::invalid_argument);
}

TEST_CASE("star_area_d2 branches and complement") {
  using sigvol::star_area_d2;
  // At height 1 the areas are the degree-2 monic constants.
  CHECK(star_area_d2(1, 1.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK(star_area_d2(0, 1.0) == doctest::Approx(13.0 / 6.0).epsilon(1e-15));

  // Both branch formulas meet at B = 4 with value 64/3.
  CHECK(star_area_d2(1, 4.0) == doctest::Approx(64.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(star_area_d2(1, 4.0 + 1e-9) - star_area_d2(1, 4.0)) < 1e-6);
  CHECK(star_area_d2(1, 9.0) == doctest::Approx(72.0).epsilon(1e-15));
  CHECK(star_area_d2(1, 2.0) == doctest::Approx(8.0 - 8.0 / 6.0).epsilon(1e-15));

  for (double B : {1.0, 2.5, 4.0, 10.0, 100.0})
    CHECK(star_area_d2(0, B) + star_area_d2(1, B) == 4.0 * B * B);

  CHECK_THROWS_AS((void)star_area_d2(1, 0.5), std::domain_error);
  CHECK_THROWS_AS((void)star_area_d2(2, 2.0), std::domain_error);
  CHECK_THROWS_AS((void)star_area_d2(-1, 2.0), std::domain_error);
}

TEST_CASE("davenport_h") {
  CHECK(sigvol::davenport_h(2) == 7);
  CHECK(sigvol::davenport_h(1) == 3);
  CHECK(sigvol::davenport_h(15) == 241);
  CHECK_THROWS_AS((void)sigvol::davenport_h(0), std::domain_error);
}
