#pragma once

#include <stdexcept>
#include <string>

namespace raag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& label)
      : Error("unknown vertex '" + label + "'") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace raag
