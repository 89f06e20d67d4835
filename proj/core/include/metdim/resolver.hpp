#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// Which objects a landmark set must tell apart.
enum class Kind { VertexMetric, EdgeMetric };

std::string_view to_string(Kind kind);

/// Number of objects of the given kind (vertices or edges).
std::size_t object_count(const Graph& g, Kind kind);

/// Sorted set of distinct vertex ids.
class LandmarkSet {
 public:
  LandmarkSet() = default;
  /// Sorts the ids. Throws std::invalid_argument on duplicates.
  explicit LandmarkSet(std::vector<Vertex> ids);
  LandmarkSet(std::initializer_list<Vertex> ids) : LandmarkSet(std::vector<Vertex>(ids)) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  std::span<const Vertex> ids() const noexcept { return ids_; }

  bool contains(Vertex v) const;
  /// Adds v; no-op if already present.
  void insert(Vertex v);
  void erase(Vertex v);

  /// Throws std::out_of_range if any id is >= n.
  void validate(std::size_t n) const;

  bool operator==(const LandmarkSet&) const = default;
  auto operator<=>(const LandmarkSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

std::string to_string(const LandmarkSet& s);

/// Distances from each landmark to one object, in landmark order.
using Signature = std::vector<DistanceMatrix::Dist>;

/// A vertex or an edge; the alternative picks the Kind.
using Target = std::variant<Vertex, EdgeRef>;

Signature signature_of(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s,
                       Target target);

/// Outcome of a generator check. On failure `unresolved` holds two object
/// indices (vertex ids or edge indices) that share a signature.
struct GeneratorCheck {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::size_t>> unresolved;
  explicit operator bool() const noexcept { return ok; }
};

/// Signatures are sorted and adjacent entries compared. Throws
/// std::invalid_argument for a disconnected graph.
GeneratorCheck is_generator(const Graph& g, const DistanceMatrix& d, const LandmarkSet& s,
                            Kind kind);

/// Adds the vertex resolving the most unresolved pairs until every pair is
/// resolved; ties go to the lowest id.
LandmarkSet greedy_generator(const Graph& g, const DistanceMatrix& d, Kind kind);
LandmarkSet greedy_generator(const Graph& g, Kind kind);

/// Same rule, starting from `seed` instead of the empty set.
LandmarkSet greedy_completion(const Graph& g, const DistanceMatrix& d, Kind kind,
                              LandmarkSet seed);

/// Lower bound from pairs of objects that only two vertices (or one) can
/// tell apart. For vertex kind these are exactly the twin classes, each of
/// which contributes all but one of its members.
std::size_t twin_lower_bound(const Graph& g, const DistanceMatrix& d, Kind kind);

/// A subgraph H attached to the rest of the graph only through `boundary`.
/// Any generator of the host contains at least dimension - |boundary|
/// vertices of H outside the boundary.
struct BoundaryPiece {
  Kind kind = Kind::VertexMetric;
  std::vector<Vertex> vertices;  // sorted host ids
  std::vector<Vertex> boundary;  // sorted; vertices with a neighbor outside
  std::size_t dimension = 0;     // of the induced subgraph, for `kind`
  bool certified = false;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Certificate { Certified, UpperBoundOnly };
std::string_view to_string(Certificate c);

/// Where the matching lower bound of a certified result came from.
enum class LowerBoundSource { Trivial, Exhaustion, Twins, Pieces };
std::string_view to_string(LowerBoundSource s);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t sets_checked = 0;
  double millis = 0.0;
};

struct SolveResult {
  Kind kind = Kind::VertexMetric;
  std::size_t dimension = 0;
  LandmarkSet witness;
  Certificate certificate = Certificate::UpperBoundOnly;
  LowerBoundSource lower_bound_source = LowerBoundSource::Trivial;
  std::size_t lower_bound = 0;
  SolveStats stats;
};

/// {"kind","dimension","witness","certificate","nodes","sets_checked","millis"}
/// in that order. With include_timing=false, millis is written as 0.
std::string to_json(const SolveResult& r, bool include_timing = true);

struct SolveOptions {
  /// Use twin and piece bounds to certify without refuting size - 1.
  bool structural_bounds = true;
  std::vector<BoundaryPiece> pieces;
  unsigned threads = 1;
  /// Forces a single worker so the witness is the first optimum in branching order.
  bool deterministic = false;
  /// 0 means unlimited.
  std::uint64_t node_budget = 0;
};

/// Builds a piece from host vertices: computes the boundary and solves the
/// induced subgraph exactly. The piece is certified iff that solve is.
BoundaryPiece make_piece(const Graph& g, std::vector<Vertex> vertices, Kind kind,
                         const SolveOptions& options = {});

/// Sum over pieces of max(0, dimension - |boundary|). Throws
/// std::invalid_argument on overlapping, non-isometric, uncertified,
/// wrong-kind, or wrongly-bounded pieces.
std::size_t piece_lower_bound(const Graph& g, const DistanceMatrix& d,
                              std::span<const BoundaryPiece> pieces, Kind kind);

/// Exact (edge) metric dimension by branch and bound over unresolved
/// pairs, with iterative deepening on the target size.
SolveResult exact_dimension(const Graph& g, Kind kind, const SolveOptions& options = {});

struct RefutationRecord {
  Kind kind = Kind::VertexMetric;
  std::size_t size = 0;
  bool refuted = false;
  /// Candidate sets of exactly `size` shown not to be generators. Equals
  /// C(n, size) when refuted.
  std::uint64_t sets_refuted = 0;
  std::uint64_t nodes = 0;
  std::optional<LandmarkSet> counterexample;
};

/// Exhaustive lexicographic enumeration of all `size`-subsets, pruning
/// prefixes that cannot be completed. Stops at the first generator found.
/// Throws BudgetExhausted if node_budget (nonzero) runs out.
RefutationRecord certify_no_generator_of_size(const Graph& g, Kind kind, std::size_t size,
                                              std::uint64_t node_budget = 0);

/// Plain subset enumeration in size order, comparing sorted signatures.
/// Independent of the search code; for testing. n <= kOracleMaxOrder.
inline constexpr std::size_t kOracleMaxOrder = 20;
SolveResult naive_oracle(const Graph& g, Kind kind);

}  // namespace metdim
