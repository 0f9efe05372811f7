#pragma once

#include <stdexcept>
#include <string>

namespace hypell {

struct NonIntegralInvariant : std::runtime_error {
  explicit NonIntegralInvariant(const std::string& m) : std::runtime_error(m) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& m) : std::runtime_error(m) {}
};

struct ParityMismatch : std::runtime_error {
  explicit ParityMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct OutOfRegime : std::runtime_error {
  explicit OutOfRegime(const std::string& m) : std::runtime_error(m) {}
};

struct UnknownCase : std::runtime_error {
  explicit UnknownCase(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hypell
