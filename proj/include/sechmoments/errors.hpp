#pragma once

#include <stdexcept>
#include <string>

namespace sechmoments {

// Requested error bound cannot be met at the caller's precision_bits.
// Recoverable: raise precision_bits and retry.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A term or enumeration budget was exceeded before the target was reached.
// The message reports the bound that was achieved.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sechmoments
