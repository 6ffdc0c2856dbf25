#pragma once

#include <stdexcept>
#include <string>

namespace horn {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension/shape mismatch between operands.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Invalid input data (precondition violation, malformed value).
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at a point where the rational map is undefined.
class BaseLocusError : public Error {
public:
  explicit BaseLocusError(const std::string& msg) : Error(msg) {}
};

// Iterative numeric routine failed to converge.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace horn
