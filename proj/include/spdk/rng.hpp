#pragma once

#include <array>
#include <cstdint>

namespace spdk {

// Identifies one reproducible random stream. Batch kernels derive per-task
// keys as {seed, stream + task_index}; identical keys give identical
// sequences on every platform and thread count.
struct RngKey {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngKey substream(std::uint64_t offset) const { return {seed, stream + offset}; }
};

// xoshiro256++ seeded through splitmix64 from (seed, stream).
// Self-contained so that sequences are bit-reproducible; std::normal_distribution
// and friends are implementation-defined and would not be.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0);
  explicit RngStream(RngKey key) : RngStream(key.seed, key.stream) {}

  std::uint64_t next_u64();
  double next_double();      // uniform on [0, 1)
  double next_double_pos();  // uniform on (0, 1), safe under log
  double next_normal();      // standard normal, Marsaglia polar
  double next_gamma(double shape);  // Gamma(shape, rate 1), Marsaglia-Tsang

 private:
  std::array<std::uint64_t, 4> s_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace spdk
