#pragma once

// Seeded deterministic uniform stream. One stream = one sequence: the same
// seed always reproduces the same doubles, which is what makes every sampler
// output and every CLI byte reproducible.
//
// Generator: xoshiro256++ (Blackman/Vigna), state seeded from four
// consecutive outputs of splitmix64. Uniforms are (bits >> 11) * 2^-53,
// i.e. the top 53 bits, giving values in [0,1).
//
// Ownership: a stream is single-owner; distinct streams may be used from
// different threads without coordination. For parallel work derive one
// stream per worker with for_worker(): worker w gets the (w+1)-th output of
// a splitmix64 sequence seeded with the master seed.

#include <array>
#include <cstdint>

namespace perpsim {

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace detail

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = detail::splitmix64_next(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
      state_[0] = 0x9E3779B97F4A7C15ULL;  // all-zero state is absorbing
  }

  // Stream for worker `worker_index` under a single master seed. Streams for
  // distinct workers are produced by statistically independent seeds.
  static RngStream for_worker(std::uint64_t master_seed,
                              std::uint64_t worker_index) {
    std::uint64_t sm = master_seed + worker_index * 0x9E3779B97F4A7C15ULL;
    return RngStream(detail::splitmix64_next(sm));
  }

  // Next 64 raw bits (xoshiro256++ output scrambler).
  std::uint64_t next_bits() {
    const std::uint64_t result =
        detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    ++draws_;
    return result;
  }

  // Uniform double in [0,1) with 53 random mantissa bits.
  double next() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }

  // Number of values drawn so far; used for uniforms-per-sample accounting.
  std::uint64_t draw_count() const { return draws_; }

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t draws_ = 0;
};

}  // namespace perpsim
