#pragma once

#include <stdexcept>
#include <string>

namespace rigsep {

// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric solver failed to converge or hit an iteration limit.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee that must hold by construction was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rigsep
