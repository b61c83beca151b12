#pragma once

#include <stdexcept>
#include <string>

namespace tropskel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (unknown id, wrong edge type, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid graph input: disconnected, non-positive length, dangling id.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `where` names the offending location (file, JSON path).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace tropskel
