#include "med/resample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "med/errors.hpp"

namespace med {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

double kernel_weight(ResampleKernel k, double x) {
  x = std::abs(x);
  switch (k) {
    case ResampleKernel::bilinear:
      return x < 1.0 ? 1.0 - x : 0.0;
    case ResampleKernel::bicubic: {
      // Keys cubic, a = -0.5.
      constexpr double a = -0.5;
      if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
      if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
      return 0.0;
    }
    case ResampleKernel::lanczos:
      return x < 3.0 ? sinc(x) * sinc(x / 3.0) : 0.0;
    case ResampleKernel::hamming: {
      if (x >= 1.0) return 0.0;
      if (x == 0.0) return 1.0;
      const double px = std::numbers::pi * x;
      return std::sin(px) / px * (0.54 + 0.46 * std::cos(px));
    }
  }
  return 0.0;
}

double kernel_support(ResampleKernel k) {
  switch (k) {
    case ResampleKernel::bilinear:
    case ResampleKernel::hamming:
      return 1.0;
    case ResampleKernel::bicubic:
      return 2.0;
    case ResampleKernel::lanczos:
      return 3.0;
  }
  return 1.0;
}

struct AxisTaps {
  std::vector<int> first;       // first source index per destination index
  std::vector<double> weights;  // taps_per_dst weights per destination index
  int taps = 0;
};

AxisTaps build_taps(int in_size, int out_size, ResampleKernel k) {
  const double scale = static_cast<double>(in_size) / out_size;
  const double support = kernel_support(k);
  AxisTaps t;
  t.taps = static_cast<int>(2.0 * support) + 1;
  t.first.resize(out_size);
  t.weights.resize(static_cast<std::size_t>(out_size) * t.taps);
  for (int j = 0; j < out_size; ++j) {
    const double center = (j + 0.5) * scale - 0.5;
    const int first = static_cast<int>(std::floor(center - support)) + 1;
    t.first[j] = first;
    double sum = 0.0;
    for (int i = 0; i < t.taps; ++i) {
      const double w = kernel_weight(k, center - (first + i));
      t.weights[static_cast<std::size_t>(j) * t.taps + i] = w;
      sum += w;
    }
    if (sum != 0.0) {
      for (int i = 0; i < t.taps; ++i)
        t.weights[static_cast<std::size_t>(j) * t.taps + i] /= sum;
    }
  }
  return t;
}

}  // namespace

ResampleKernel parse_kernel(const std::string& name) {
  if (name == "bilinear") return ResampleKernel::bilinear;
  if (name == "bicubic") return ResampleKernel::bicubic;
  if (name == "lanczos") return ResampleKernel::lanczos;
  if (name == "hamming") return ResampleKernel::hamming;
  throw ParamError("unknown resample kernel: " + name);
}

std::string kernel_name(ResampleKernel k) {
  switch (k) {
    case ResampleKernel::bilinear: return "bilinear";
    case ResampleKernel::bicubic: return "bicubic";
    case ResampleKernel::lanczos: return "lanczos";
    case ResampleKernel::hamming: return "hamming";
  }
  return "?";
}

Tensor resize(const Tensor& img, int out_h, int out_w, ResampleKernel kernel) {
  if (img.rank() != 3) throw ParamError("resize: expected H x W x C tensor");
  if (out_h < 1 || out_w < 1) throw ParamError("resize: output size must be positive");
  const int h = img.dim(0), w = img.dim(1), c = img.dim(2);

  const AxisTaps xt = build_taps(w, out_w, kernel);
  const AxisTaps yt = build_taps(h, out_h, kernel);

  // Horizontal pass, then vertical.
  Tensor mid({h, out_w, c});
  for (int y = 0; y < h; ++y) {
    for (int j = 0; j < out_w; ++j) {
      const double* wt = &xt.weights[static_cast<std::size_t>(j) * xt.taps];
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (int i = 0; i < xt.taps; ++i) {
          const int sx = std::clamp(xt.first[j] + i, 0, w - 1);
          acc += wt[i] * img.at(y, sx, ch);
        }
        mid.at(y, j, ch) = acc;
      }
    }
  }
  Tensor out({out_h, out_w, c});
  for (int j = 0; j < out_h; ++j) {
    const double* wt = &yt.weights[static_cast<std::size_t>(j) * yt.taps];
    for (int x = 0; x < out_w; ++x) {
      for (int ch = 0; ch < c; ++ch) {
        double acc = 0.0;
        for (int i = 0; i < yt.taps; ++i) {
          const int sy = std::clamp(yt.first[j] + i, 0, h - 1);
          acc += wt[i] * mid.at(sy, x, ch);
        }
        out.at(j, x, ch) = acc;
      }
    }
  }
  return out;
}

Image resize(const Image& img, int out_h, int out_w, ResampleKernel kernel) {
  Image out;
  out.data = clip(resize(img.data, out_h, out_w, kernel), 0.0, 1.0);
  out.colorspace = img.colorspace;
  return out;
}

}  // namespace med
