#ifndef MAXCUT_ERRORS_HPP
#define MAXCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxcut {

/// Error categories; the CLI maps them to exit codes
/// (parameter -> 2, size -> 3, numeric -> 4).
class Error : public std::runtime_error {
public:
  enum class Kind { parameter, size, numeric };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Invalid argument or option value.
class ParameterError : public Error {
public:
  explicit ParameterError(const std::string& what) : Error(Kind::parameter, what) {}
};

/// Mismatched lengths between a graph and an assignment/diagonal/factor.
class DimensionError : public ParameterError {
public:
  explicit DimensionError(const std::string& what) : ParameterError(what) {}
};

/// Malformed document; carries the 1-based line number.
class ParseError : public ParameterError {
public:
  ParseError(int line, const std::string& what)
      : ParameterError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Structurally invalid input (missing record, inconsistent partition, ...).
class InputError : public ParameterError {
public:
  explicit InputError(const std::string& what) : ParameterError(what) {}
};

/// Instance exceeds an enforced cap (brute-force node limit, qubit cap).
class SizeError : public Error {
public:
  explicit SizeError(const std::string& what) : Error(Kind::size, what) {}
};

/// Numerical failure inside a solver (non-finite gradient, overflow).
class NumericError : public Error {
public:
  explicit NumericError(const std::string& what) : Error(Kind::numeric, what) {}
};

}  // namespace maxcut

#endif
