#pragma once

#include <stdexcept>
#include <string>

namespace lieph {

/// Thrown when an operation needs more certified degrees than its inputs
/// carry. `needed` is the smallest precision that would have sufficed.
struct InsufficientPrecision : std::runtime_error {
  InsufficientPrecision(const std::string& where, int needed, int available)
      : std::runtime_error(where + ": insufficient precision (need " + std::to_string(needed) + ", have " +
                           std::to_string(available) + ")"),
        needed(needed),
        available(available) {}
  int needed;
  int available;
};

}  // namespace lieph
