/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line surface: signature-region volume estimators, exact lattice
// counts, quadrature between the monic and positive-lead families, and the
// verification suite. Structured results go to standard output (CSV by
// default, JSON on request); diagnostics go to standard error. Identical
// argv, seed included, produces byte-identical standard output; opt-in
// --timing adds a wall-clock column that breaks that identity, which is why
// it is off by default.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigvol/estimate.hpp"
#include "sigvol/lattice.hpp"
#include "sigvol/output.hpp"
#include "sigvol/reference.hpp"
#include "sigvol/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Emitter {
  std::string format = "csv";
  bool timing = false;
  std::vector<sigvol::OutputRecord> records;

  void add(sigvol::OutputRecord rec, std::optional<double> wall_ms) {
    if (timing) rec.wall_ms = wall_ms;
    records.push_back(std::move(rec));
  }

  void flush() const {
    if (format == "json") {
      std::cout << sigvol::to_json(records);
      return;
    }
    std::cout << sigvol::csv_header() << '\n';
    for (const auto& rec : records) {
      std::cout << sigvol::to_csv_row(rec) << '\n';
    }
  }
};

// "all" covers the tabulated range d = 2..15; otherwise a single integer.
std::optional<std::vector<int>> parse_degrees(const std::string& text) {
  if (text == "all") {
    std::vector<int> ds;
    for (int d = 2; d <= 15; ++d) ds.push_back(d);
    return ds;
  }
  int d = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto res = std::from_chars(begin, end, d);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return std::vector<int>{d};
}

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature distributions of bounded-height real polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  Emitter emitter;
  app.add_option("--format", emitter.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--timing", emitter.timing,
               "Append wall-clock milliseconds to each row (breaks "
               "byte-reproducibility of the output)");

  double budget = 1e8;
  bool budget_env_bad = false;
  if (const char* env = std::getenv("SIGVOL_BUDGET")) {
    char* tail = nullptr;
    const double parsed = std::strtod(env, &tail);
    if (tail == env || *tail != '\0' || parsed <= 0.0) {
      budget_env_bad = true;
    } else {
      budget = parsed;
    }
  }
  app.add_option("--budget", budget,
                 "Enumeration budget: maximum number of lattice vectors a "
                 "count may visit (SIGVOL_BUDGET overrides the default; "
                 "this flag overrides both)")
      ->capture_default_str();

  std::string degree_text = "2";
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  double eps = 1e-12;
  int sig = 0;
  double height_real = 1.0;
  long long height_int = 1;
  bool monic = false;
  std::vector<long long> heights;
  double tol = 1e-6;
  std::uint64_t quad_samples = 20000;
  std::string suite = "quick";

  auto add_sampling_flags = [&](CLI::App* cmd, bool with_eps) {
    cmd->add_option("--samples", samples, "Monte Carlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
    cmd->add_option("--workers", workers,
                    "Worker threads (0 = hardware count)")
        ->capture_default_str();
    if (with_eps) {
      cmd->add_option("--eps", eps,
                      "Degeneracy tolerance of the float classifier")
          ->capture_default_str();
    }
  };

  CLI::App* mc_star_cmd = app.add_subcommand(
      "mc-star", "Monic-family signature-region volumes at height 1");
  mc_star_cmd->add_option("--degree", degree_text,
                          "Degree (integer, or 'all' for 2..15)")
      ->capture_default_str();
  add_sampling_flags(mc_star_cmd, true);

  CLI::App* mc_plus_cmd = app.add_subcommand(
      "mc-plus", "Positive-lead-family signature-region volumes at height 1");
  mc_plus_cmd->add_option("--degree", degree_text,
                          "Degree (integer, or 'all' for 2..15)")
      ->capture_default_str();
  add_sampling_flags(mc_plus_cmd, true);

  CLI::App* mc_root_cmd = app.add_subcommand(
      "mc-root",
      "Monic region volume for one signature, integrated in root space");
  mc_root_cmd->add_option("--degree", degree_text, "Degree")
      ->capture_default_str();
  mc_root_cmd->add_option("--sig", sig, "Non-real pair count s")->required();
  mc_root_cmd->add_option("--height", height_real, "Coefficient bound B")
      ->capture_default_str();
  add_sampling_flags(mc_root_cmd, true);

  CLI::App* count_cmd = app.add_subcommand(
      "count", "Exact lattice counts of integer polynomials by signature");
  count_cmd->add_option("--degree", degree_text, "Degree")
      ->capture_default_str();
  count_cmd->add_option("--height", height_int, "Coefficient bound B")
      ->required();
  count_cmd->add_flag("--monic", monic, "Fix the leading coefficient to 1");
  count_cmd->add_option("--workers", workers,
                        "Worker threads (0 = hardware count)")
      ->capture_default_str();

  CLI::App* asym_cmd = app.add_subcommand(
      "asym",
      "Exact counts across heights against the volume-scaling law");
  asym_cmd->add_option("--degree", degree_text, "Degree")
      ->capture_default_str();
  asym_cmd->add_option("--sig", sig, "Non-real pair count s")->required();
  asym_cmd->add_option("--heights", heights, "Comma-separated heights")
      ->required()
      ->delimiter(',');
  add_sampling_flags(asym_cmd, true);

  CLI::App* quad_cmd = app.add_subcommand(
      "quad",
      "Positive-lead volume from monic volumes by adaptive quadrature");
  quad_cmd->add_option("--degree", degree_text, "Degree")
      ->capture_default_str();
  quad_cmd->add_option("--sig", sig, "Non-real pair count s")->required();
  quad_cmd->add_option("--tol", tol, "Absolute quadrature tolerance")
      ->capture_default_str();
  quad_cmd->add_option("--samples", quad_samples,
                       "Samples per integrand evaluation (degree >= 3, "
                       "where the monic volume is itself estimated)")
      ->capture_default_str();
  quad_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  quad_cmd->add_option("--workers", workers,
                       "Worker threads (0 = hardware count)")
      ->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the acceptance suite and print PASS/FAIL per criterion");
  verify_cmd->add_option("--suite", suite, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  verify_cmd->add_option("--workers", workers,
                         "Worker threads (0 = hardware count)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cerr << e.what() << '\n';
    return 2;
  }

  if (budget_env_bad) {
    std::cerr << "SIGVOL_BUDGET is not a positive number\n";
    return 2;
  }

  const auto degrees_opt = parse_degrees(degree_text);
  if (!degrees_opt) {
    std::cerr << "invalid --degree value: " << degree_text << '\n';
    return 2;
  }
  const std::vector<int>& degrees = *degrees_opt;
  if (degrees.size() > 1 && !app.got_subcommand(mc_star_cmd) &&
      !app.got_subcommand(mc_plus_cmd)) {
    std::cerr << "--degree all is only valid for mc-star and mc-plus\n";
    return 2;
  }

  try {
    if (app.got_subcommand(mc_star_cmd) || app.got_subcommand(mc_plus_cmd)) {
      const bool star = app.got_subcommand(mc_star_cmd);
      for (int d : degrees) {
        sigvol::RunConfig cfg;
        cfg.degree = d;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.eps = eps;
        const auto t0 = Clock::now();
        sigvol::Estimate e = star ? sigvol::mc_star(cfg) : sigvol::mc_plus(cfg);
        const double ms = elapsed_ms(t0);
        for (std::size_t s = 0; s < e.mean.size(); ++s) {
          sigvol::OutputRecord rec;
          rec.command = star ? "mc-star" : "mc-plus";
          rec.degree = d;
          rec.nonreal_pairs = static_cast<int>(s);
          rec.value = e.mean[s];
          rec.std_error = e.std_error[s];
          rec.samples = e.samples;
          rec.seed = e.seed;
          rec.discarded = e.discarded;
          emitter.add(std::move(rec), ms);
        }
      }
    } else if (app.got_subcommand(mc_root_cmd)) {
      sigvol::RunConfig cfg;
      cfg.degree = degrees.front();
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.workers = workers;
      cfg.eps = eps;
      const auto t0 = Clock::now();
      sigvol::ScalarEstimate e =
          sigvol::mc_rootspace(degrees.front(), sig, height_real, cfg);
      const double ms = elapsed_ms(t0);
      sigvol::OutputRecord rec;
      rec.command = "mc-root";
      rec.degree = degrees.front();
      rec.nonreal_pairs = sig;
      rec.value = e.value;
      rec.std_error = e.std_error;
      rec.samples = e.samples;
      rec.height = height_real;
      rec.seed = e.seed;
      rec.discarded = e.discarded;
      emitter.add(std::move(rec), ms);
    } else if (app.got_subcommand(count_cmd)) {
      sigvol::LatticeOptions opt;
      opt.workers = workers;
      opt.budget = budget;
      const auto t0 = Clock::now();
      sigvol::CountResult cr =
          monic ? sigvol::count_monic(degrees.front(), height_int, opt)
                : sigvol::count_exact(degrees.front(), height_int, opt);
      const double ms = elapsed_ms(t0);
      for (std::size_t s = 0; s < cr.counts.size(); ++s) {
        sigvol::OutputRecord rec;
        rec.command = "count";
        rec.degree = cr.degree;
        rec.nonreal_pairs = static_cast<int>(s);
        rec.value = static_cast<double>(cr.counts[s]);
        rec.height = static_cast<double>(cr.height);
        emitter.add(std::move(rec), ms);
      }
    } else if (app.got_subcommand(asym_cmd)) {
      const int d = degrees.front();
      sigvol::RunConfig cfg;
      cfg.degree = d;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.workers = workers;
      cfg.eps = eps;
      const auto t0 = Clock::now();
      sigvol::Estimate lam = sigvol::mc_plus(cfg);
      sigvol::LatticeOptions opt;
      opt.workers = workers;
      opt.budget = budget;
      sigvol::AsymptoticReport rep =
          sigvol::asymptotic_report(d, sig, heights, lam.mean, opt);
      const double ms = elapsed_ms(t0);

      sigvol::OutputRecord lrec;
      lrec.command = "asym-lambda";
      lrec.degree = d;
      lrec.nonreal_pairs = sig;
      lrec.value = rep.lambda_plus_hat;
      lrec.std_error = lam.std_error[static_cast<std::size_t>(sig)];
      lrec.samples = lam.samples;
      lrec.seed = lam.seed;
      lrec.discarded = lam.discarded;
      emitter.add(std::move(lrec), ms);
      for (const auto& row : rep.rows) {
        sigvol::OutputRecord crec;
        crec.command = "asym-count";
        crec.degree = d;
        crec.nonreal_pairs = sig;
        crec.value = static_cast<double>(row.count);
        crec.height = static_cast<double>(row.height);
        emitter.add(std::move(crec), ms);
        sigvol::OutputRecord rrec;
        rrec.command = "asym-ratio";
        rrec.degree = d;
        rrec.nonreal_pairs = sig;
        rrec.value = row.ratio;
        rrec.height = static_cast<double>(row.height);
        emitter.add(std::move(rrec), ms);
        sigvol::OutputRecord drec;
        drec.command = "asym-resid";
        drec.degree = d;
        drec.nonreal_pairs = sig;
        drec.value = row.residual;
        drec.height = static_cast<double>(row.height);
        emitter.add(std::move(drec), ms);
      }
      sigvol::OutputRecord frec;
      frec.command = "asym-cfit";
      frec.degree = d;
      frec.nonreal_pairs = sig;
      frec.value = rep.max_residual_times_height;
      emitter.add(std::move(frec), ms);
    } else if (app.got_subcommand(quad_cmd)) {
      const int d = degrees.front();
      sigvol::StarEvalFn fn;
      if (d == 2) {
        const int s = sig;
        fn = [s](double b) {
          return sigvol::StarEval{sigvol::star_area_d2(s, b), 0.0};
        };
      } else {
        sigvol::RunConfig cfg;
        cfg.degree = d;
        cfg.samples = quad_samples;
        cfg.seed = seed;
        cfg.workers = workers;
        const int s = sig;
        fn = [s, cfg](double b) {
          sigvol::ScalarEstimate e = sigvol::mc_star_height(s, b, cfg);
          return sigvol::StarEval{e.value, e.std_error};
        };
      }
      const auto t0 = Clock::now();
      sigvol::QuadratureResult q =
          sigvol::plus_from_star_quadrature(d, sig, fn, tol);
      const double ms = elapsed_ms(t0);
      if (!q.converged) {
        std::cerr << "quad: tolerance not reached within the evaluation "
                     "budget; the reported error bound is honest\n";
      }
      sigvol::OutputRecord rec;
      rec.command = "quad";
      rec.degree = d;
      rec.nonreal_pairs = sig;
      rec.value = q.value;
      rec.std_error = q.error_bound;
      rec.samples = q.evaluations;
      emitter.add(std::move(rec), ms);
    } else if (app.got_subcommand(verify_cmd)) {
      sigvol::VerifyOptions opt;
      opt.full = suite == "full";
      opt.seed = seed;
      opt.workers = workers;
      const auto results = sigvol::run_verification(opt, std::cout);
      for (const auto& r : results) {
        if (!r.passed) return 1;
      }
      return 0;
    }
  } catch (const sigvol::budget_error& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  emitter.flush();
  return 0;
}
