/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// fail. Criteria 1-10 run in process through the library's verification
// suite; the output-determinism criterion additionally invokes the actual
// CLI twice (path given as argv[1]) and byte-compares the two runs, so the
// shipped binary is exercised end to end, not just the library.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "sigvol/verify.hpp"

namespace {

std::string run_command(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void report(int index, const std::string& name, bool passed,
            const std::string& detail) {
  std::cout << (passed ? "PASS " : "FAIL ") << index << ' ' << name << ": "
            << detail << '\n'
            << std::flush;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-sigvol-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  sigvol::VerifyOptions opt;
  opt.full = false;
  opt.seed = 1;

  std::ostringstream sink;
  auto results = sigvol::run_verification(opt, sink);

  bool all_passed = true;
  for (const auto& r : results) {
    if (r.name == "output-determinism") {
      // Fold a literal double execution of the CLI into the in-process
      // determinism probe.
      const std::string cmd =
          "'" + cli + "' verify --suite quick --seed 1 2>/dev/null";
      int code_a = 0, code_b = 0;
      std::string run_a = run_command(cmd, code_a);
      std::string run_b = run_command(cmd, code_b);
      bool cli_same =
          !run_a.empty() && run_a == run_b && code_a == code_b;
      bool passed = r.passed && cli_same;
      std::string detail = r.detail;
      detail += cli_same ? "; two CLI runs byte-identical"
                         : "; CLI runs diverged";
      report(r.index, r.name, passed, detail);
      all_passed = all_passed && passed;
    } else {
      report(r.index, r.name, r.passed, r.detail);
      all_passed = all_passed && r.passed;
    }
  }

  return all_passed ? 0 : 1;
}
