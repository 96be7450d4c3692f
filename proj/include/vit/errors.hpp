#pragma once

#include <stdexcept>
#include <string>

namespace vit {

// Precondition violations: bad parameters, malformed grids, bad CLI input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures: singular systems, unstable dynamics where stability is required,
// divergent time integration.
class NumericalError : public std::runtime_error {
 public:
  enum class Kind { Singular, Unstable, Diverged };

  NumericalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vit
