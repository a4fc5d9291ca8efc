#pragma once

#include <stdexcept>
#include <string>

namespace brickforge {

enum class ErrorCode {
  LoopRejected,
  EmptyOrFullShore,
  TooLarge,
  UnknownEdge,
  UnknownVertex,
  UnknownName,
  NoPerfectMatching,
  NotMatchingCovered,
  EvenShore,
  NotBipartite,
  BipartiteInput,
  NotRGraph,
  NotNearBrick,
  NotRemovable,
  NotBInvariant,
  NotRBrick,
  NotRCompatible,
  EdgeInDoubleton,
  PreconditionViolated,
  WrongDegree,
  IdenticalNeighbors,
  StuckIdenticalNeighbors,
  EmptyPart,
  BarrierTooSmall,
  NotAMatching,
  BaseBrick,
  AlreadyThin,
  TheoremViolation,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace brickforge
