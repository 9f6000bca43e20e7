/* This file is part of sigvol.
 * Copyright (c) 2026 the sigvol authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef SIGVOL_RNG_HPP
#define SIGVOL_RNG_HPP

#include <array>
#include <cstdint>

namespace sigvol {

// splitmix64 step: advances the state and returns the next output.
// Used for seed expansion and for deriving worker substream seeds.
std::uint64_t splitmix64_next(std::uint64_t& state) noexcept;

// Deterministic substream seed for a worker. Injective in worker_index for a
// fixed master seed (the finalizer is a bijection on 64-bit words), so
// distinct workers can never receive identical substreams.
std::uint64_t derive_substream_seed(std::uint64_t master_seed,
                                    std::uint64_t worker_index) noexcept;

// xoshiro256++ by Blackman and Vigna. Chosen because it is defined purely in
// terms of 64-bit shifts, rotations and xors, so every platform reproduces
// the same stream bit for bit. State is seeded via splitmix64 expansion;
// the all-zero state cannot arise that way.
class Xoshiro256pp {
public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() noexcept { return (next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
  }

private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace sigvol

#endif
