#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sefe {

enum class ErrorCode {
  NonPlanarInput,
  MalformedEdge,
  MalformedInput,
  CommonGraphNotCycles,
  DisconnectedGraph,
  NotACutvertex,
  NotBiconnected,
  NotVirtual,
  CycleNotInBlock,
  CapExceeded,
  EdgeNotExclusive,
  SameComponent,
  UnionDisconnected,
  PreprocessingRequired,
  ConstraintViolation,
  CycleFamilyMismatch,
  EmbeddingConflict,
  CycleNotEmbedded,
  UnsupportedComponent,
  InternalInvariant,
};

std::string_view error_name(ErrorCode code);

class SefeError : public std::runtime_error {
 public:
  SefeError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw SefeError(code, detail); }

#define SEFE_ASSERT(cond, msg)                                                 \
  do {                                                                         \
    if (!(cond)) ::sefe::fail(::sefe::ErrorCode::InternalInvariant, (msg));    \
  } while (0)

}  // namespace sefe
