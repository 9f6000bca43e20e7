/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include <benchmark/benchmark.h>

#include <vector>

#include "sigvol/estimate.hpp"
#include "sigvol/lattice.hpp"
#include "sigvol/poly.hpp"
#include "sigvol/rng.hpp"
#include "sigvol/rootspace.hpp"

namespace {

// Pre-drawn coefficient vectors so the classifier, not the generator,
// dominates the loop.
std::vector<sigvol::FloatPolynomial> sample_polys(int degree, int count) {
  sigvol::Xoshiro256pp rng(7);
  std::vector<sigvol::FloatPolynomial> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<double> c(static_cast<size_t>(degree) + 1);
    for (auto& v : c) v = rng.uniform(-1.0, 1.0);
    c.back() = 1.0;
    out.push_back(sigvol::FloatPolynomial{std::move(c)});
  }
  return out;
}

void BM_SignatureFloat(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  auto polys = sample_polys(degree, 1024);
  size_t i = 0;
  for (auto _ : state) {
    auto sig = sigvol::signature_float(polys[i++ & 1023]);
    benchmark::DoNotOptimize(sig);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SignatureFloat)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_SignatureExact(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  sigvol::Xoshiro256pp rng(11);
  std::vector<sigvol::ExactPolynomial> polys;
  for (int i = 0; i < 256; ++i) {
    std::vector<long> c(static_cast<size_t>(degree) + 1);
    for (auto& v : c) v = static_cast<long>(rng.next() % 19) - 9;
    if (c.back() == 0) c.back() = 1;
    polys.push_back(sigvol::ExactPolynomial::from_int_coeffs(c));
  }
  size_t i = 0;
  for (auto _ : state) {
    auto sig = sigvol::signature_exact(polys[i++ & 255]);
    benchmark::DoNotOptimize(sig);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SignatureExact)->Arg(3)->Arg(6);

void BM_JacobianWeight(benchmark::State& state) {
  sigvol::Xoshiro256pp rng(3);
  sigvol::RootTuple t;
  t.x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  t.yz = {{rng.uniform(-1, 1), rng.uniform(-1, 1)},
          {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigvol::jacobian_weight(t));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_JacobianWeight);

void BM_McStar(benchmark::State& state) {
  sigvol::RunConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  cfg.samples = 20000;
  cfg.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigvol::mc_star(cfg));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(cfg.samples));
}
// Work happens on pool threads, so rate against wall time.
BENCHMARK(BM_McStar)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CountExact(benchmark::State& state) {
  const long long height = state.range(0);
  sigvol::LatticeOptions opt;
  opt.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigvol::count_exact(2, height, opt));
  }
  state.SetItemsProcessed(state.iterations() * (2 * height + 1) *
                          (2 * height + 1) * (2 * height + 1));
}
BENCHMARK(BM_CountExact)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
