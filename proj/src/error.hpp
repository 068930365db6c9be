#pragma once

#include <stdexcept>
#include <string>

namespace ecgraph {

// Failure categories surfaced through the C API and mapped to CLI exit codes.
enum class errc {
  invalid_argument,
  budget_exceeded,
  cap_exceeded,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ecgraph
