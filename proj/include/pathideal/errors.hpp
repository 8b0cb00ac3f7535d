#pragma once

#include <stdexcept>
#include <string>

namespace pathideal {

/// Raised when an exponential computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation overran its deadline and was abandoned.
class DeadlineExceeded : public std::runtime_error {
 public:
  explicit DeadlineExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathideal
