#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>

namespace rigsep {

std::uint64_t splitmix64(std::uint64_t x);

// Derives the seed of a child stream from a parent seed and a key.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key);
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

// Seedable generator with platform-independent uniform draws.  Streams are
// split with mix_seed so that (seed, key path) identifies every draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform on [0,1) from the top 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on [lo,hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform integer in [0,bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  bool bernoulli(double p) { return uniform01() < p; }

  Rng substream(std::uint64_t key) const { return Rng(mix_seed(seed_, key)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Worker count from RIGSEP_WORKERS, else hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(i) for i in [0,count) on worker_count() threads.  Each index is
// processed exactly once; results must be written to per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rigsep
