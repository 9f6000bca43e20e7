/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/output.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

sigvol::OutputRecord full_record() {
  sigvol::OutputRecord rec;
  rec.command = "mc-star";
  rec.degree = 3;
  rec.nonreal_pairs = 1;
  rec.value = 7.1875;
  rec.std_error = 0.25;
  rec.samples = 200000;
  rec.height = 1.0;
  rec.seed = 42;
  rec.discarded = 3;
  rec.wall_ms = 12.5;
  return rec;
}

}  // namespace

TEST_CASE("format_real is shortest-faithful") {
  using sigvol::format_real;
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-0.0) == "-0");
  CHECK(format_real(42.0) == "42");
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");

  std::mt19937_64 rng(0xf02347u);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int rep = 0; rep < 10000; ++rep) {
    double v = std::ldexp(mant(rng), expo(rng));
    std::string text = format_real(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
    CHECK(text.find(',') == std::string::npos);
  }
}

TEST_CASE("csv layout is fixed") {
  CHECK(sigvol::csv_header() ==
        "command,d,s,value,stderr,samples,B,seed,discarded,wall_ms");

  auto rec = full_record();
  CHECK(sigvol::to_csv_row(rec) ==
        "mc-star,3,1,7.1875,0.25,200000,1,42,3,12.5");

  // Absent fields are empty cells, never omitted columns.
  sigvol::OutputRecord sparse;
  sparse.command = "count";
  sparse.degree = 2;
  sparse.value = 18.0;
  std::string row = sigvol::to_csv_row(sparse);
  CHECK(row == "count,2,,18,,,,,,");
  CHECK(std::count(row.begin(), row.end(), ',') == 9);
}

TEST_CASE("json mirrors the csv columns with nulls") {
  auto rec = full_record();
  sigvol::OutputRecord sparse;
  sparse.command = "quad";
  sparse.degree = 2;
  sparse.nonreal_pairs = 0;
  sparse.value = 2.5;

  std::string text = sigvol::to_json({rec, sparse});
  CHECK(text.front() == '[');
  CHECK(text.back() == '\n');
  CHECK(text.find("\"command\":\"mc-star\"") != std::string::npos);
  CHECK(text.find("\"d\":3") != std::string::npos);
  CHECK(text.find("\"s\":1") != std::string::npos);
  CHECK(text.find("\"value\":7.1875") != std::string::npos);
  CHECK(text.find("\"stderr\":0.25") != std::string::npos);
  CHECK(text.find("\"samples\":200000") != std::string::npos);
  CHECK(text.find("\"B\":1") != std::string::npos);
  CHECK(text.find("\"seed\":42") != std::string::npos);
  CHECK(text.find("\"discarded\":3") != std::string::npos);
  CHECK(text.find("\"wall_ms\":12.5") != std::string::npos);
  CHECK(text.find("\"stderr\":null") != std::string::npos);
  CHECK(text.find("\"wall_ms\":null") != std::string::npos);

  CHECK(sigvol::to_json({}) == "[\n]\n");
}
