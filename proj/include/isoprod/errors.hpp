#pragma once

#include <stdexcept>
#include <string>

namespace isoprod {

/// Broad failure categories; each maps to a CLI exit code.
enum class ErrorKind {
  usage = 1,       // malformed input, unknown tokens, missing files
  validation = 2,  // well-formed input that violates a mathematical requirement
  consistency = 3  // an internal invariant failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

/// A group table that is not a group (non-Latin, non-associative, no identity).
struct ConstructionError : Error {
  explicit ConstructionError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

/// Order cap exceeded.
struct SizeError : Error {
  explicit SizeError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

/// Operation called outside its domain (non-abelian input, non-central element, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& what) : Error(ErrorKind::consistency, what) {}
};

}  // namespace isoprod
