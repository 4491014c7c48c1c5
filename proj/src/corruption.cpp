#include "med/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "med/errors.hpp"

namespace med {

namespace {

using json = nlohmann::json;

struct FamilyInfo {
  const char* name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const FamilyInfo& family_info(CorruptionFamily f) {
  static const std::map<CorruptionFamily, FamilyInfo> table = {
      {CorruptionFamily::gaussian, {"gaussian", {"sigma"}, {}}},
      {CorruptionFamily::local_var_gaussian, {"local_var_gaussian", {"k"}, {"window"}}},
      {CorruptionFamily::poisson, {"poisson", {"lambda_mean"}, {}}},
      {CorruptionFamily::speckle, {"speckle", {"v"}, {}}},
      {CorruptionFamily::speckle_uniform, {"speckle_uniform", {}, {}}},
      {CorruptionFamily::salt_pepper, {"salt_pepper", {"r"}, {}}},
      {CorruptionFamily::downscale, {"downscale", {"scale"}, {}}},
      {CorruptionFamily::drop_mask, {"drop_mask", {"drop_ratio"}, {}}},
      {CorruptionFamily::identity, {"identity", {}, {}}},
  };
  return table.at(f);
}

void check_range(CorruptionFamily f, const std::string& key, double v) {
  const std::string where = family_name(f) + "." + key;
  if (key == "sigma" || key == "k" || key == "v") {
    if (v < 0.0) throw ParamError(where + " must be >= 0");
  } else if (key == "lambda_mean") {
    if (v < 0.0 || v > 600.0) throw ParamError(where + " must be in [0, 600]");
  } else if (key == "r") {
    if (v < 0.0 || v > 1.0) throw ParamError(where + " must be in [0, 1]");
  } else if (key == "scale") {
    if (v != 2.0 && v != 3.0 && v != 4.0) throw ParamError(where + " must be 2, 3 or 4");
  } else if (key == "drop_ratio") {
    if (v < 0.0 || v >= 1.0) throw ParamError(where + " must be in [0, 1)");
  } else if (key == "window") {
    const int w = static_cast<int>(v);
    if (w != v || w < 3 || w % 2 == 0) throw ParamError(where + " must be an odd integer >= 3");
  } else {
    throw ParamError("unknown parameter " + where);
  }
}

}  // namespace

CorruptionFamily parse_family(const std::string& name) {
  for (auto f : {CorruptionFamily::gaussian, CorruptionFamily::local_var_gaussian,
                 CorruptionFamily::poisson, CorruptionFamily::speckle,
                 CorruptionFamily::speckle_uniform, CorruptionFamily::salt_pepper,
                 CorruptionFamily::downscale, CorruptionFamily::drop_mask,
                 CorruptionFamily::identity}) {
    if (family_info(f).name == name) return f;
  }
  throw ParamError("unknown corruption family: " + name);
}

std::string family_name(CorruptionFamily f) { return family_info(f).name; }

void CorruptionSpec::validate() const {
  const FamilyInfo& info = family_info(family);
  for (const auto& key : info.required) {
    if (!params.contains(key))
      throw ParamError(std::string(info.name) + ": missing parameter " + key);
  }
  for (const auto& [key, value] : params) {
    const bool known = std::find(info.required.begin(), info.required.end(), key) !=
                           info.required.end() ||
                       std::find(info.optional.begin(), info.optional.end(), key) !=
                           info.optional.end();
    if (!known) throw ParamError(std::string(info.name) + ": unexpected parameter " + key);
    check_range(family, key, value);
  }
}

double CorruptionSpec::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ParamError(family_name(family) + ": missing parameter " + key);
  return it->second;
}

double CorruptionSpec::param_or(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string CorruptionSpec::to_json() const {
  json j;
  j["family"] = family_name(family);
  j["params"] = params;
  if (family == CorruptionFamily::downscale) j["kernel"] = kernel_name(kernel);
  j["seed"] = seed;
  return j.dump();
}

CorruptionSpec CorruptionSpec::from_json(const std::string& line) {
  CorruptionSpec spec;
  json j = json::parse(line);
  spec.family = parse_family(j.at("family").get<std::string>());
  for (auto& [key, value] : j.at("params").items()) spec.params[key] = value.get<double>();
  if (j.contains("kernel")) spec.kernel = parse_kernel(j["kernel"].get<std::string>());
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.validate();
  return spec;
}

// ---- operators ----

Image apply_gaussian(const Image& img, double sigma, std::uint64_t seed) {
  if (sigma < 0.0) throw ParamError("gaussian: sigma must be >= 0");
  Image out = img;
  if (sigma == 0.0) return out;
  Rng rng(seed);
  const double std01 = sigma / 255.0;
  for (std::int64_t i = 0; i < out.data.numel(); ++i)
    out.data[i] = std::clamp(out.data[i] + std01 * rng.normal(), 0.0, 1.0);
  return out;
}

Image apply_local_var_gaussian(const Image& img, double k, int window, std::uint64_t seed) {
  if (k < 0.0) throw ParamError("local_var_gaussian: k must be >= 0");
  if (window < 3 || window % 2 == 0)
    throw ParamError("local_var_gaussian: window must be an odd integer >= 3");
  Image out = img;
  if (k == 0.0) return out;
  const int h = img.height(), w = img.width(), c = img.channels();
  const int r = window / 2;
  Rng rng(seed);

  // reflect index (no repeated edge sample), as in symmetric padding
  auto reflect = [](int i, int n) {
    while (i < 0 || i >= n) {
      if (i < 0) i = -i;
      if (i >= n) i = 2 * n - 2 - i;
    }
    return i;
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double sum = 0.0, sum_sq = 0.0;
        for (int dy = -r; dy <= r; ++dy) {
          const int sy = reflect(y + dy, h);
          for (int dx = -r; dx <= r; ++dx) {
            const double v = img.data.at(sy, reflect(x + dx, w), ch);
            sum += v;
            sum_sq += v * v;
          }
        }
        const double n = static_cast<double>(window) * window;
        const double variance = std::max(0.0, sum_sq / n - (sum / n) * (sum / n));
        const double local_std = std::sqrt(variance);
        out.data.at(y, x, ch) =
            std::clamp(img.data.at(y, x, ch) + k * local_std * rng.normal(), 0.0, 1.0);
      }
    }
  }
  return out;
}

Image apply_poisson(const Image& img, double lambda_mean, std::uint64_t seed) {
  if (lambda_mean < 0.0) throw ParamError("poisson: lambda_mean must be >= 0");
  Image out = img;
  if (lambda_mean == 0.0) return out;
  Rng rng(seed);
  for (std::int64_t i = 0; i < out.data.numel(); ++i) {
    const double v255 = out.data[i] * 255.0 + static_cast<double>(rng.poisson(lambda_mean));
    out.data[i] = std::clamp(v255, 0.0, 255.0) / 255.0;
  }
  return out;
}

Image apply_speckle(const Image& img, double v, std::uint64_t seed) {
  if (v < 0.0) throw ParamError("speckle: v must be >= 0");
  Image out = img;
  if (v == 0.0) return out;
  Rng rng(seed);
  const double std01 = v / 255.0;
  for (std::int64_t i = 0; i < out.data.numel(); ++i) {
    const double x = out.data[i];
    out.data[i] = std::clamp(x + x * std01 * rng.normal(), 0.0, 1.0);
  }
  return out;
}

Image apply_speckle_uniform(const Image& img, std::uint64_t seed) {
  Image out = img;
  Rng rng(seed);
  for (std::int64_t i = 0; i < out.data.numel(); ++i) out.data[i] *= rng.uniform();
  return out;
}

Image apply_salt_pepper(const Image& img, double r, std::uint64_t seed) {
  if (r < 0.0 || r > 1.0) throw ParamError("salt_pepper: r must be in [0, 1]");
  Image out = img;
  Rng rng(seed);
  const int h = img.height(), w = img.width(), c = img.channels();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double u = rng.uniform();
      if (u < r / 2.0) {
        for (int ch = 0; ch < c; ++ch) out.data.at(y, x, ch) = 1.0;
      } else if (u < r) {
        for (int ch = 0; ch < c; ++ch) out.data.at(y, x, ch) = 0.0;
      }
    }
  }
  return out;
}

Image apply_downscale(const Image& img, int scale, ResampleKernel kernel) {
  if (scale != 2 && scale != 3 && scale != 4)
    throw ParamError("downscale: scale must be 2, 3 or 4");
  const int h = img.height(), w = img.width();
  if (h % scale != 0 || w % scale != 0)
    throw ParamError("downscale: image dimensions must be divisible by scale");
  Image low = resize(img, h / scale, w / scale, kernel);
  return resize(low, h, w, ResampleKernel::bicubic);
}

Corrupted apply_drop_mask(const Image& img, double drop_ratio, std::uint64_t seed) {
  if (drop_ratio < 0.0 || drop_ratio >= 1.0)
    throw ParamError("drop_mask: drop_ratio must be in [0, 1)");
  const int h = img.height(), w = img.width(), c = img.channels();
  const std::int64_t total = static_cast<std::int64_t>(h) * w;
  const std::int64_t n_drop = std::llround(drop_ratio * static_cast<double>(total));

  std::vector<std::int64_t> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (std::int64_t i = 0; i < n_drop; ++i) {
    const std::int64_t j = i + rng.uniform_int(0, total - 1 - i);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }

  Corrupted result;
  result.image = img;
  result.mask = Tensor::full({h, w, 1}, 1.0);
  for (std::int64_t i = 0; i < n_drop; ++i) {
    const std::int64_t p = order[static_cast<std::size_t>(i)];
    const int y = static_cast<int>(p / w), x = static_cast<int>(p % w);
    (*result.mask).at(y, x, 0) = 0.0;
    for (int ch = 0; ch < c; ++ch) result.image.data.at(y, x, ch) = 0.0;
  }
  return result;
}

Corrupted apply_spec(const Image& img, const CorruptionSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case CorruptionFamily::gaussian:
      return {apply_gaussian(img, spec.param("sigma"), spec.seed), std::nullopt};
    case CorruptionFamily::local_var_gaussian:
      return {apply_local_var_gaussian(img, spec.param("k"),
                                       static_cast<int>(spec.param_or("window", 7)), spec.seed),
              std::nullopt};
    case CorruptionFamily::poisson:
      return {apply_poisson(img, spec.param("lambda_mean"), spec.seed), std::nullopt};
    case CorruptionFamily::speckle:
      return {apply_speckle(img, spec.param("v"), spec.seed), std::nullopt};
    case CorruptionFamily::speckle_uniform:
      return {apply_speckle_uniform(img, spec.seed), std::nullopt};
    case CorruptionFamily::salt_pepper:
      return {apply_salt_pepper(img, spec.param("r"), spec.seed), std::nullopt};
    case CorruptionFamily::downscale:
      return {apply_downscale(img, static_cast<int>(spec.param("scale")), spec.kernel),
              std::nullopt};
    case CorruptionFamily::drop_mask:
      return apply_drop_mask(img, spec.param("drop_ratio"), spec.seed);
    case CorruptionFamily::identity:
      return {img, std::nullopt};
  }
  throw ParamError("apply_spec: unhandled family");
}

// ---- pools ----

void CorruptionPool::validate() const {
  if (entries.empty()) throw ConfigError("corruption pool is empty");
  for (const auto& e : entries) {
    if (e.weight < 0.0) throw ConfigError("pool weight must be >= 0");
    const FamilyInfo& info = family_info(e.family);
    for (const auto& key : info.required) {
      if (!e.ranges.contains(key) && !(e.family == CorruptionFamily::downscale))
        throw ConfigError(std::string(info.name) + " pool entry missing range for " + key);
    }
    for (const auto& [key, range] : e.ranges) {
      check_range(e.family, key, range.first);
      check_range(e.family, key, range.second);
      if (range.second < range.first)
        throw ConfigError(family_name(e.family) + "." + key + ": range hi < lo");
    }
    if (e.family == CorruptionFamily::downscale) {
      if (!e.ranges.contains("scale")) throw ConfigError("downscale pool entry needs scale");
      if (e.kernels.empty()) throw ConfigError("downscale pool entry needs kernel=");
    }
  }
  if (total_weight() <= 0.0) throw ConfigError("corruption pool has zero total weight");
}

double CorruptionPool::total_weight() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.weight;
  return s;
}

CorruptionSpec sample_spec(const CorruptionPool& pool, Rng& rng) {
  pool.validate();
  const double pick = rng.uniform() * pool.total_weight();
  double acc = 0.0;
  const PoolEntry* chosen = &pool.entries.back();
  for (const auto& e : pool.entries) {
    acc += e.weight;
    if (pick < acc) {
      chosen = &e;
      break;
    }
  }

  CorruptionSpec spec;
  spec.family = chosen->family;
  for (const auto& [key, range] : chosen->ranges) {
    if (key == "scale" || key == "window") {
      spec.params[key] = static_cast<double>(
          rng.uniform_int(static_cast<std::int64_t>(range.first),
                          static_cast<std::int64_t>(range.second)));
    } else {
      spec.params[key] = range.first == range.second
                             ? range.first
                             : rng.uniform(range.first, range.second);
    }
  }
  if (!chosen->kernels.empty()) {
    spec.kernel = chosen->kernels[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(chosen->kernels.size()) - 1))];
  }
  spec.seed = rng.u64();
  spec.validate();
  return spec;
}

CorruptionPool parse_pool(const std::string& text) {
  CorruptionPool pool;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string family_token;
    if (!(in >> family_token)) continue;  // blank line

    PoolEntry entry;
    entry.family = parse_family(family_token);
    std::string token;
    bool have_weight = false;
    while (in >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) {
        entry.weight = std::stod(token);
        have_weight = true;
        break;
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "kernel") {
        std::istringstream ks(value);
        std::string k;
        while (std::getline(ks, k, ',')) entry.kernels.push_back(parse_kernel(k));
      } else {
        const auto colon = value.find(':');
        const double lo = std::stod(colon == std::string::npos ? value : value.substr(0, colon));
        const double hi = colon == std::string::npos ? lo : std::stod(value.substr(colon + 1));
        entry.ranges[key] = {lo, hi};
      }
    }
    if (!have_weight)
      throw ConfigError("pool line " + std::to_string(lineno) + ": missing trailing weight");
    pool.entries.push_back(std::move(entry));
  }
  pool.validate();
  return pool;
}

CorruptionPool load_pool(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open pool file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pool(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  } catch (const ParamError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace med
