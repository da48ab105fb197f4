#pragma once

#include <stdexcept>
#include <string>

namespace fpirec {

/// Incompatible tensor/matrix shapes. Messages name both shapes.
class ShapeError : public std::invalid_argument {
public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Out-of-range or inconsistent parameter values.
class ParamError : public std::invalid_argument {
public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite value produced by an iterative solver.
class DivergenceError : public std::runtime_error {
public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  long iteration() const { return iteration_; }

private:
  long iteration_;
};

/// File format or filesystem failure.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpirec
