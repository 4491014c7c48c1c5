#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "med/image.hpp"
#include "med/resample.hpp"
#include "med/rng.hpp"

namespace med {

enum class CorruptionFamily {
  gaussian,
  local_var_gaussian,
  poisson,
  speckle,
  speckle_uniform,
  salt_pepper,
  downscale,
  drop_mask,
  identity,
};

CorruptionFamily parse_family(const std::string& name);
std::string family_name(CorruptionFamily f);

/// One concrete corruption: family + parameters + RNG seed. Applying the
/// same spec to the same image twice yields bit-identical output.
///
/// Noise levels follow the usual 0-255 convention (sigma, lambda_mean, v)
/// and are divided by 255 internally since images live in [0,1].
struct CorruptionSpec {
  CorruptionFamily family = CorruptionFamily::identity;
  std::map<std::string, double> params;
  ResampleKernel kernel = ResampleKernel::bicubic;  // downscale only
  std::uint64_t seed = 0;

  /// Checks that params holds exactly the keys the family requires
  /// (plus recognised optional ones) and that values are in range.
  void validate() const;

  double param(const std::string& key) const;
  double param_or(const std::string& key, double fallback) const;

  std::string to_json() const;
  static CorruptionSpec from_json(const std::string& line);
};

/// Result of applying a corruption; drop_mask additionally yields the
/// binary keep-mask (1 = kept), which inpainting-aware models consume.
struct Corrupted {
  Image image;
  std::optional<Tensor> mask;  // [H,W,1], values exactly 0 or 1
};

// ---- individual corruption operators ----

/// y = clip(x + n), n ~ N(0, (sigma/255)^2) i.i.d. per element.
Image apply_gaussian(const Image& img, double sigma, std::uint64_t seed);

/// Per-pixel noise std = k * local std over a window x window
/// neighbourhood (reflect padding), computed per channel.
Image apply_local_var_gaussian(const Image& img, double k, int window, std::uint64_t seed);

/// On the 0-255 scale: y = clip(Poisson(lambda_mean) + x, 0, 255) / 255.
Image apply_poisson(const Image& img, double lambda_mean, std::uint64_t seed);

/// Multiplicative Gaussian: y = clip(x + x * n), n ~ N(0, (v/255)^2).
Image apply_speckle(const Image& img, double v, std::uint64_t seed);

/// Literal uniform speckle: y = x * U(0,1) i.i.d. per element.
Image apply_speckle_uniform(const Image& img, std::uint64_t seed);

/// Each pixel (all channels jointly) -> 1.0 w.p. r/2, 0.0 w.p. r/2.
Image apply_salt_pepper(const Image& img, double r, std::uint64_t seed);

/// Downscale by `scale` with the named kernel, then bicubic-upscale back to
/// the original grid. Dimensions must be divisible by scale.
Image apply_downscale(const Image& img, int scale, ResampleKernel kernel);

/// Zero out exactly round(drop_ratio*H*W) pixels chosen by a random
/// permutation; returns the corrupted image and the keep-mask.
Corrupted apply_drop_mask(const Image& img, double drop_ratio, std::uint64_t seed);

/// Dispatch on spec.family; validates the spec first.
Corrupted apply_spec(const Image& img, const CorruptionSpec& spec);

// ---- pools ----

struct PoolEntry {
  CorruptionFamily family = CorruptionFamily::identity;
  std::map<std::string, std::pair<double, double>> ranges;  // inclusive lo:hi
  std::vector<ResampleKernel> kernels;                      // downscale only
  double weight = 1.0;
};

/// Weighted set of corruption families with parameter ranges; one spec is
/// sampled per training view.
struct CorruptionPool {
  std::vector<PoolEntry> entries;

  void validate() const;
  double total_weight() const;
};

/// Family proportional to weights, ranged parameters uniform, integer
/// parameters uniform over the integer range, fresh seed recorded.
CorruptionSpec sample_spec(const CorruptionPool& pool, Rng& rng);

/// Parse the plain-text pool format: one `family param=lo:hi ... weight`
/// entry per line; '#' starts a comment. `kernel=` takes a comma list.
CorruptionPool parse_pool(const std::string& text);
CorruptionPool load_pool(const std::string& path);

}  // namespace med
