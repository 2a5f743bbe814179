#pragma once

#include <stdexcept>

namespace aspecthier {

// Bad configuration (flag values, top-n ordering, sample size). CLI exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input files. CLI exit 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aspecthier
