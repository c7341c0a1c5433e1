#pragma once

#include <stdexcept>
#include <string>

namespace fusionprod {

/// A configured cap was too small for the requested computation.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A structural guarantee failed; never raised on valid inputs.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fusionprod
