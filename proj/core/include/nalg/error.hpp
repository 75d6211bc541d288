#pragma once

#include <stdexcept>
#include <string>

namespace nalg {

// All engine-level failures (bad input, parse errors, violated preconditions)
// surface as this type. Internal invariant violations use assert instead.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nalg
