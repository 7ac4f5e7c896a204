#ifndef COEDIT_ERRORS_HPP
#define COEDIT_ERRORS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace coedit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: vertex id out of range, overlapping blocks, bad trees.
class InputError : public Error {
public:
  using Error::Error;
};

/// Text input that failed to parse. `line()` is 1-based, 0 when unknown.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A search or oracle was asked to run beyond its configured bound.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractError : public Error {
public:
  using Error::Error;
};

/// An operation that requires a cograph got a graph with an induced P4.
class RecognitionError : public Error {
public:
  RecognitionError(const std::string& what, std::array<std::size_t, 4> witness)
      : Error(what), witness_(witness) {}
  const std::array<std::size_t, 4>& witness() const noexcept { return witness_; }

private:
  std::array<std::size_t, 4> witness_;
};

/// Broken internal invariant (a bug, not bad input).
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace coedit

#endif
