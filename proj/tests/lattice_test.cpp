/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sigvol/reference.hpp"

namespace {

// Sign-of-discriminant count for quadratics and cubics, written without any
// polynomial machinery so it can referee count_exact.
std::vector<std::uint64_t> brute_reference(int d, long long B, bool monic) {
  std::vector<std::uint64_t> counts(static_cast<size_t>(d / 2 + 1), 0);
  auto classify2 = [](long long p0, long long p1, long long p2) {
    return p1 * p1 - 4 * p0 * p2 < 0 ? 1 : 0;
  };
  auto classify3 = [](long long p0, long long p1, long long p2, long long p3) {
    // For real cubics a vanishing discriminant forces all roots real.
    long long a = p3, b = p2, c = p1, e = p0;
    long long disc = 18 * a * b * c * e - 4 * b * b * b * e + b * b * c * c -
                     4 * a * c * c * c - 27 * a * a * e * e;
    return disc < 0 ? 1 : 0;
  };
  long long lead_lo = monic ? 1 : -B;
  long long lead_hi = monic ? 1 : B;
  for (long long p0 = -B; p0 <= B; ++p0)
    for (long long p1 = -B; p1 <= B; ++p1)
      for (long long lead = lead_lo; lead <= lead_hi; ++lead) {
        if (lead == 0) continue;
        if (d == 2) {
          ++counts[static_cast<size_t>(classify2(p0, p1, lead))];
        } else {
          for (long long p2 = -B; p2 <= B; ++p2)
            ++counts[static_cast<size_t>(classify3(p0, p1, p2, lead))];
        }
      }
  return counts;
}

}  // namespace

TEST_CASE("pinned small counts") {
  auto c = sigvol::count_exact(2, 1);
  CHECK(c.counts == std::vector<std::uint64_t>{12, 6});
  CHECK(c.total() == 18);
  CHECK(c.degree == 2);
  CHECK(c.height == 1);
  CHECK_FALSE(c.monic);

  auto m = sigvol::count_monic(2, 1);
  CHECK(m.counts == std::vector<std::uint64_t>{6, 3});
  CHECK(m.total() == 9);
  CHECK(m.monic);

  // Degree 1 has no room for non-real pairs.
  auto lin = sigvol::count_exact(1, 3);
  CHECK(lin.counts == std::vector<std::uint64_t>{42});

  CHECK(sigvol::count_exact(3, 2).total() == 500);
}

TEST_CASE("totals follow from the box size alone") {
  for (int d : {2, 3, 4}) {
    for (long long B : {1LL, 2LL, 3LL}) {
      std::uint64_t side = static_cast<std::uint64_t>(2 * B + 1);
      std::uint64_t full = 1;
      for (int i = 0; i < d; ++i) full *= side;
      CHECK(sigvol::count_exact(d, B).total() == full * side - full);
      CHECK(sigvol::count_monic(d, B).total() == full);
    }
  }
}

TEST_CASE("counts match the discriminant-sign reference") {
  for (int d : {2, 3})
    for (long long B : {1LL, 2LL, 4LL}) {
      CHECK(sigvol::count_exact(d, B).counts == brute_reference(d, B, false));
      CHECK(sigvol::count_monic(d, B).counts == brute_reference(d, B, true));
    }
}

TEST_CASE("symmetry folding changes nothing but the work") {
  sigvol::LatticeOptions folded;
  sigvol::LatticeOptions plain;
  plain.use_symmetry = false;
  for (int d : {2, 3})
    for (long long B : {1LL, 2LL}) {
      CHECK(sigvol::count_exact(d, B, folded).counts ==
            sigvol::count_exact(d, B, plain).counts);
      CHECK(sigvol::count_monic(d, B, folded).counts ==
            sigvol::count_monic(d, B, plain).counts);
    }
}

TEST_CASE("worker count does not change counts") {
  sigvol::LatticeOptions one;
  one.workers = 1;
  sigvol::LatticeOptions many;
  many.workers = 5;
  CHECK(sigvol::count_exact(3, 3, one).counts ==
        sigvol::count_exact(3, 3, many).counts);
}

TEST_CASE("budget guard fires before enumeration") {
  sigvol::LatticeOptions opt;
  opt.budget = 1000;
  CHECK_THROWS_AS((void)sigvol::count_exact(3, 50, opt), sigvol::budget_error);
  CHECK_THROWS_AS((void)sigvol::count_monic(5, 20, opt), sigvol::budget_error);
  // The default budget admits the monic view of the same box.
  CHECK_THROWS_AS((void)sigvol::count_exact(3, 50), sigvol::budget_error);
  CHECK(sigvol::count_monic(3, 50).total() == 101ull * 101 * 101);
}

TEST_CASE("count validation") {
  CHECK_THROWS_AS((void)sigvol::count_exact(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sigvol::count_exact(2, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)sigvol::count_monic(-1, 1), std::invalid_argument);
}

TEST_CASE("asymptotic ratios approach twice the region volume") {
  // Exact limits lambda_plus for d = 2, indexed by s.
  std::vector<double> lambda;
  for (int s = 0; s <= 1; ++s)
    for (const auto& c : sigvol::exact_constants())
      if (c.degree == 2 && c.nonreal_pairs == s && c.plus_family)
        lambda.push_back(c.value());
  REQUIRE(lambda.size() == 2);

  auto rep = sigvol::asymptotic_report(2, 1, {10, 20, 50}, lambda);
  CHECK(rep.degree == 2);
  CHECK(rep.nonreal_pairs == 1);
  CHECK(rep.lambda_plus_hat == lambda[1]);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].count == 3332);
  CHECK(rep.rows[1].count == 25336);
  CHECK(rep.rows[2].count == 382636);
  for (const auto& row : rep.rows) {
    CHECK(row.ratio ==
          static_cast<double>(row.count) /
              std::pow(static_cast<double>(row.height), 3));
    CHECK(row.residual == std::abs(row.ratio - 2.0 * lambda[1]));
  }
  // The B = 50 ratio sits 0.079 above the limit 2.98235, inside the
  // first-order error window C / B with C a little under 4.
  CHECK(rep.rows[2].residual <= 0.1);
  CHECK(rep.rows[2].residual >= 0.05);
  double want_c = 0.0;
  for (const auto& row : rep.rows)
    want_c = std::max(want_c, row.residual * static_cast<double>(row.height));
  CHECK(rep.max_residual_times_height == want_c);
  CHECK(rep.max_residual_times_height == doctest::Approx(3.937).epsilon(1e-3));

  // Residuals shrink with height.
  CHECK(rep.rows[0].residual > rep.rows[1].residual);
  CHECK(rep.rows[1].residual > rep.rows[2].residual);
}

TEST_CASE("cubic asymptotics at moderate height") {
  std::vector<double> lambda{0.0, 6.246};  // measured d = 3 plus volume
  auto rep = sigvol::asymptotic_report(3, 1, {20}, lambda);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].count == 2171556);
  CHECK(rep.rows[0].ratio == doctest::Approx(13.572225).epsilon(1e-9));
  CHECK(std::abs(rep.rows[0].ratio - 2.0 * lambda[1]) <=
        0.10 * 2.0 * lambda[1]);
}

TEST_CASE("asymptotic_report validation") {
  std::vector<double> lambda{1.0, 1.0};
  CHECK_THROWS_AS(
      (void)sigvol::asymptotic_report(2, 1, {20, 10}, lambda),
      std::invalid_argument);
  CHECK_THROWS_AS((void)sigvol::asymptotic_report(2, 1, {}, lambda),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)sigvol::asymptotic_report(2, 2, {10}, lambda),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)sigvol::asymptotic_report(2, 1, {10}, std::vector<double>{1.0}),
      std::invalid_argument);
}
