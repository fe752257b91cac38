#pragma once

#include <stdexcept>
#include <string>

namespace pirank {

// Failure categories. The CLI maps each one onto a distinct exit code.
enum class ErrorKind {
  malformed_input,  // unparsable text, unknown letters, inconsistent files
  domain,           // well-formed input outside an operation's domain
  precondition,     // a stated hypothesis of a construction does not hold
  budget,           // search budget exhausted
  invariant,        // a proven inequality or invariant failed: a falsification alarm
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace pirank
