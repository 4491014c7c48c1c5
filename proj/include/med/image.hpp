#pragma once

#include <string>

#include "med/tensor.hpp"

namespace med {

enum class Colorspace { rgb, gray };

/// H x W x C floating image with values in [0,1]; C is 1 (gray) or 3 (rgb).
/// The universal carrier for clean images, corrupted views and residuals.
struct Image {
  Tensor data;  // [H,W,C]
  Colorspace colorspace = Colorspace::rgb;

  Image() = default;
  Image(Tensor t, Colorspace cs);

  int height() const { return data.dim(0); }
  int width() const { return data.dim(1); }
  int channels() const { return data.dim(2); }

  /// Throws ParamError unless shape/range invariants hold.
  void validate() const;

  static Image constant(int h, int w, int c, double value);
};

/// Mean squared error over all elements; shapes must match.
double mse(const Tensor& a, const Tensor& b);

}  // namespace med
