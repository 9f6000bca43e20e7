/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_OUTPUT_HPP
#define SIGVOL_OUTPUT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigvol {

// One emitted result row. Optional fields render as empty CSV cells and
// JSON nulls. Reals are printed with 17 significant digits so every value
// round-trips through the text exactly.
struct OutputRecord {
  std::string command;
  int degree = 0;
  std::optional<int> nonreal_pairs;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<std::uint64_t> samples;
  std::optional<double> height;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> discarded;
  std::optional<double> wall_ms;
};

// Locale-independent general-format rendering at 17 significant digits,
// trailing zeros trimmed; integral values print without a decimal point.
std::string format_real(double v);

std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);

// JSON array of objects keyed like the CSV columns.
std::string to_json(const std::vector<OutputRecord>& recs);

}  // namespace sigvol

#endif
