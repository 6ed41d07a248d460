#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ew {

/// Base for failures of the numerical pipeline (singular systems, blow-up).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(std::size_t column, double pivot)
      : NumericalError("singular banded system: pivot " + std::to_string(pivot) + " in column " +
                       std::to_string(column)),
        column_(column) {}

  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class BlowUpError : public NumericalError {
 public:
  BlowUpError(double t, double magnitude)
      : NumericalError("solution blew up at t=" + std::to_string(t) +
                       " (max |a| = " + std::to_string(magnitude) + ")") {}
};

/// Bad run configuration; line is 0 when the problem is not tied to one line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ew
