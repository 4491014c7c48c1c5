#include "med/image.hpp"

#include <cmath>

#include "med/errors.hpp"

namespace med {

Image::Image(Tensor t, Colorspace cs) : data(std::move(t)), colorspace(cs) { validate(); }

void Image::validate() const {
  if (data.rank() != 3) throw ParamError("Image: tensor must be H x W x C");
  const int h = data.dim(0), w = data.dim(1), c = data.dim(2);
  if (h < 1 || w < 1) throw ParamError("Image: empty spatial dimensions");
  if (c != 1 && c != 3) throw ParamError("Image: channels must be 1 or 3");
  if ((colorspace == Colorspace::gray) != (c == 1))
    throw ParamError("Image: colorspace/channel mismatch");
  for (std::int64_t i = 0; i < data.numel(); ++i) {
    const double v = data[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw ParamError("Image: values must be finite and in [0,1]");
  }
}

Image Image::constant(int h, int w, int c, double value) {
  Image img;
  img.data = Tensor::full({h, w, c}, value);
  img.colorspace = c == 1 ? Colorspace::gray : Colorspace::rgb;
  return img;
}

double mse(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) throw ParamError("mse: shape mismatch");
  double acc = 0.0;
  for (std::int64_t i = 0; i < a.numel(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.numel());
}

}  // namespace med
