#pragma once

#include <stdexcept>
#include <string>

namespace cpg {

enum class ErrorKind {
  InvalidInput,  // malformed text, bad table, unsupported parameters
  CapExceeded,   // group or subgroup lattice too large for the configured caps
  NotNormal,
  NotPGroup,
  Internal,      // a self-check failed
};

class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GroupError(kind, what);
}

}  // namespace cpg
