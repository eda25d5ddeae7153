#pragma once

#include <stdexcept>
#include <string>

namespace lowrank {

/// Malformed textual input. `token()` is the offending fragment.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token)
      : std::runtime_error(what + " near '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation hit one of its configured resource caps.
class ResourceExceeded : public std::runtime_error {
 public:
  enum class Kind { Degree, Pairs, Time };

  ResourceExceeded(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace lowrank
