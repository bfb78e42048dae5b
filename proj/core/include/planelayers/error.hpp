#pragma once

#include <stdexcept>
#include <string>

namespace planelayers {

enum class ErrorKind { Usage, Precondition, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorKind::Usage, message) {}
};

// Input does not satisfy an operation's precondition (bad file, n too small,
// collinear triple where general position is needed, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::Precondition, message) {}
};

// A structural claim failed at runtime. `dump` is a self-contained reproducer
// (point file text plus context) suitable for writing to disk.
class InternalError : public Error {
 public:
  InternalError(const std::string& message, std::string dump)
      : Error(ErrorKind::Internal, message), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace planelayers
