#pragma once

#include "med/image.hpp"

namespace med {

enum class ResampleKernel { bilinear, bicubic, lanczos, hamming };

ResampleKernel parse_kernel(const std::string& name);
std::string kernel_name(ResampleKernel k);

/// Separable sample-based resize to (out_h, out_w). Source coordinate for
/// destination index j is (j + 0.5) * in/out - 0.5 with clamped borders and
/// a fixed-support kernel (no antialias prefilter), so an exact 2x bilinear
/// reduction averages adjacent pixel pairs.
Tensor resize(const Tensor& img, int out_h, int out_w, ResampleKernel kernel);

Image resize(const Image& img, int out_h, int out_w, ResampleKernel kernel);

}  // namespace med
