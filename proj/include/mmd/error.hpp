#pragma once

#include <stdexcept>
#include <string>

namespace mmd {

/// Exception carrying a module-specific error code.
template <typename Code>
class CodedError : public std::runtime_error {
 public:
  CodedError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

enum class GraphErrc {
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  Disconnected,
  TooLarge,
  NotASubgraph,
};

using GraphError = CodedError<GraphErrc>;

}  // namespace mmd
