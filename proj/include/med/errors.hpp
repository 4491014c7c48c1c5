#pragma once

#include <stdexcept>
#include <string>

namespace med {

/// Bad operation parameter (negative sigma, even window, ratio out of range, ...).
struct ParamError : std::invalid_argument {
  explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Invalid configuration (empty pool, k < 2, patch larger than images, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ingestion / on-disk data problems; message names the offending item.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (NaN loss, non-PSD covariance, failed verification).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace med
