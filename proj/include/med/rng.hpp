#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace med {

/// Deterministic random stream.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// standard. All samplers on top of it are hand-rolled so that the produced
/// values depend on nothing implementation-defined: the same seed replays the
/// same bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo,hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo,hi] inclusive, by rejection (unbiased).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Poisson(lambda) by Knuth's product-of-uniforms method. Valid for
  /// lambda in [0, 600]; O(lambda) uniforms per draw.
  std::uint32_t poisson(double lambda);

  /// Serialize / restore the full engine + cache state (checkpointing).
  std::string state() const;
  void set_state(const std::string& s);

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// FNV-1a over a string; used for stable filename-based decisions.
std::uint64_t hash_str(const std::string& s);

}  // namespace med
