#include "med/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "med/errors.hpp"

namespace med {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParamError("uniform_int: hi < lo");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 nudged away from 0 so log stays finite.
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  have_cached_ = true;
  return radius * std::cos(angle);
}

std::uint32_t Rng::poisson(double lambda) {
  if (lambda < 0.0) throw ParamError("poisson: negative lambda");
  if (lambda > 600.0) throw ParamError("poisson: lambda too large for product method");
  if (lambda == 0.0) return 0;
  const double threshold = std::exp(-lambda);
  std::uint32_t count = 0;
  double product = uniform();
  while (product > threshold) {
    ++count;
    product *= uniform();
  }
  return count;
}

std::string Rng::state() const {
  std::ostringstream os;
  os << engine_ << ' ' << (have_cached_ ? 1 : 0) << ' ';
  os.precision(17);
  os << cached_;
  return os.str();
}

void Rng::set_state(const std::string& s) {
  std::istringstream is(s);
  int cached_flag = 0;
  is >> engine_ >> cached_flag >> cached_;
  if (!is) throw DataError("Rng::set_state: malformed state string");
  have_cached_ = cached_flag != 0;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace med
