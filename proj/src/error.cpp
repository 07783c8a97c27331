#include "dtopo/error.hpp"

namespace dtopo {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parameter: return "parameter";
    case ErrorCode::membership: return "membership";
    case ErrorCode::unknown_adjacency: return "unknown-adjacency";
    case ErrorCode::parse: return "parse";
    case ErrorCode::invalid_curve: return "invalid-curve";
    case ErrorCode::unknown_name: return "unknown-name";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace dtopo
