/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_VERIFY_HPP
#define SIGVOL_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sigvol {

struct VerifyOptions {
  // The quick suite checks the tabulated reference values for d <= 8; the
  // full suite extends the table comparison to d <= 15.
  bool full = false;
  std::uint64_t seed = 1;
  // 0 selects the hardware thread count.
  unsigned workers = 0;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  // Deterministic explanation (worst observed deviation vs tolerance and
  // the like); never carries wall-clock numbers.
  std::string detail;
};

// Runs the verification suite, streaming one "PASS k name: detail" or
// "FAIL k name: detail" line per criterion to `out` as results arrive.
// Output is byte-identical across runs for a fixed seed.
std::vector<CriterionResult> run_verification(const VerifyOptions& opt,
                                              std::ostream& out);

}  // namespace sigvol

#endif
