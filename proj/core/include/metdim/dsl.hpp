#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/constructions.hpp"
#include "metdim/graph.hpp"

namespace metdim {

/// Error in a construction expression; `offset` is a 0-based byte offset.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parsed construction expression such as "subdiv(complete(7))".
///
///   spec := name "(" int { "," int } ")" | "subdiv" "(" spec ")"
///   name := complete | cmm | star | cycle | path | torus | chain
struct ConstructionSpec {
  enum class Op { Complete, Cmm, Star, Cycle, Path, Torus, Chain, Subdiv };

  Op op = Op::Complete;
  std::vector<std::size_t> args;
  std::vector<ConstructionSpec> inner;  // exactly one entry for Subdiv

  bool operator==(const ConstructionSpec&) const = default;
};

inline constexpr std::size_t kMaxSpecDepth = 8;

/// Checks arity and argument ranges as it parses.
ConstructionSpec parse_spec(std::string_view text);

/// Canonical text form; parse_spec(to_string(s)) == s.
std::string to_string(const ConstructionSpec& spec);

struct EvaluatedSpec {
  Graph graph;
  /// Set when the root is subdiv(...).
  std::optional<SubdivisionLabeling> labeling;
  /// Set when the root is chain(...).
  std::optional<ChainLayout> chain;
};

EvaluatedSpec eval_spec(const ConstructionSpec& spec);

}  // namespace metdim
