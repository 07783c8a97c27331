#pragma once

#include <stdexcept>
#include <string>

namespace dtopo {

enum class ErrorCode {
  parameter,
  membership,
  unknown_adjacency,
  parse,
  invalid_curve,
  unknown_name,
  overflow,
  io,
};

const char* error_code_name(ErrorCode code) noexcept;

// Base for every error raised by the library. Verdicts (a product that is not
// C-compatible, a set that is not a curve) are returned as data, never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dtopo
