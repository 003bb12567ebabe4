#pragma once

#include <cstdint>
#include <vector>

namespace piid {

// Counter-based generator built on the SplitMix64 output function.  Streams
// are cheap to construct, so every independently reproducible unit of work
// (a simulation draw, a Monte Carlo repetition, a grid point) gets its own
// stream derived from (seed, stream index).  Results are then independent of
// how work is scheduled across threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  // Raw 64-bit output.
  std::uint64_t next_u64();

  // Uniform on [0, 1).
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via inverse-CDF transform (one uniform per draw).
  double normal();

  // Student t with 3 degrees of freedom: normal over sqrt(chi2(3)/3),
  // consuming exactly four uniforms.
  double student_t3();

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// Stable derivation of sub-seeds, used to split one user seed into
// independent per-purpose seeds (tag) and per-repetition seeds (index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0);

}  // namespace piid
