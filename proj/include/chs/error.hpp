#pragma once

#include <stdexcept>
#include <string>

namespace chs {

/// Raised for invalid or degenerate mathematical input (bad spec, point on
/// the axis, zero-radius circle, ...). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chs
