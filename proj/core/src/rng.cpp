/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sigvol/rng.hpp"

namespace sigvol {
namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

// splitmix64 output finalizer; bijective on 64-bit words.
inline std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  return mix(state);
}

std::uint64_t derive_substream_seed(std::uint64_t master_seed,
                                    std::uint64_t worker_index) noexcept {
  // mix is a bijection, so for a fixed master seed distinct worker indices
  // map to distinct seeds.
  return mix(master_seed ^ mix(worker_index + 0x9E3779B97F4A7C15ULL));
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) noexcept {
  // Seed expansion per the xoshiro authors' recommendation. splitmix64
  // never yields four zero outputs in a row, so the forbidden all-zero
  // state cannot occur.
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64_next(s);
}

std::uint64_t Xoshiro256pp::next() noexcept {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

}  // namespace sigvol
