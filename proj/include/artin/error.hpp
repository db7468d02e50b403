#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorCode {
  PARSE_ERROR,
  DUPLICATE_EDGE,
  COEFFICIENT_BELOW_3,
  LOOP_EDGE,
  UNKNOWN_VERTEX,
  NOT_AN_AUTOMORPHISM,
  VERTEX_NOT_FIXED,
  UNKNOWN_GENERATOR,
  GRAPH_MISMATCH,
  PARITY_MISMATCH,
  NOT_INDUCIBLE,
  BUDGET_EXCEEDED,
  OUT_OF_BALL,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace artin
