#pragma once

#include <stdexcept>
#include <string>

namespace ckp {

enum class ErrorKind {
  kParse,         // malformed text input
  kValidation,    // data violates a model invariant (negative weight, b <= 0, ...)
  kPrecondition,  // operation hypotheses not met (not a pack, lifting condition, ...)
  kResource,      // enumeration limit exceeded
  kInvalidCut,    // inequality is not valid for PS
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace ckp
