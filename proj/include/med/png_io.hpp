#pragma once

#include <string>

#include "med/image.hpp"

namespace med {

/// Decode a PNG file. Palette/low-bit images are expanded; 16-bit is scaled
/// by 1/65535, 8-bit by 1/255; an alpha channel, if present, is dropped.
/// Throws DataError naming the file on any decode problem.
Image read_png(const std::string& path);

/// Encode as 8-bit PNG (values rounded from [0,1]). Output bytes are a pure
/// function of the pixel data: fixed compression, no ancillary chunks.
void write_png(const std::string& path, const Image& img);

}  // namespace med
