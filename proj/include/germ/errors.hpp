#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

/// Base for every failure surfaced by the library. `module()` names the
/// component that raised it so the CLI can report where things went wrong.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parser", "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configurable work budget ran out. Never a silent truncation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy a mathematical hypothesis the requested
/// computation needs (unit ideal at the origin, k outside the theorem range).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace germ
