#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"

namespace metdim::detail {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(std::span<const Word> set, std::size_t i) {
  return (set[i >> 6] >> (i & 63)) & 1u;
}
inline void set_bit(std::span<Word> set, std::size_t i) { set[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(std::span<Word> set, std::size_t i) {
  set[i >> 6] &= ~(Word{1} << (i & 63));
}

/// Distance from every vertex to every object, laid out object-major.
class ObjectDistances {
 public:
  static ObjectDistances build(const Graph& g, const DistanceMatrix& d, Kind kind);

  std::size_t vertices() const noexcept { return n_; }
  std::size_t objects() const noexcept { return objects_; }
  std::span<const DistanceMatrix::Dist> row(std::size_t object) const {
    return std::span<const DistanceMatrix::Dist>(table_).subspan(object * n_, n_);
  }
  DistanceMatrix::Dist at(std::size_t object, Vertex v) const { return table_[object * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::size_t objects_ = 0;
  std::vector<DistanceMatrix::Dist> table_;
};

/// For every unordered pair of objects, the set of vertices whose distances
/// to the two objects differ. Pairs are ordered by ascending set size, then
/// by object ids.
class PairTable {
 public:
  static PairTable build(const ObjectDistances& od);

  std::size_t size() const noexcept { return first_.size(); }
  std::size_t words() const noexcept { return words_; }
  std::size_t vertices() const noexcept { return n_; }

  std::span<const Word> mask(std::size_t p) const {
    return std::span<const Word>(masks_).subspan(p * words_, words_);
  }
  bool separates(std::size_t p, Vertex v) const {
    return (masks_[p * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::size_t weight(std::size_t p) const { return weight_[p]; }
  Vertex max_vertex(std::size_t p) const { return max_vertex_[p]; }
  std::size_t first(std::size_t p) const { return first_[p]; }
  std::size_t second(std::size_t p) const { return second_[p]; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> masks_;
  std::vector<std::uint32_t> first_, second_;
  std::vector<std::uint32_t> weight_;
  std::vector<Vertex> max_vertex_;
};

/// Lower bound from pairs separated by at most two vertices.
std::size_t twin_bound(const PairTable& pt, std::size_t objects);

/// Throws std::invalid_argument unless g is connected.
void require_connected(const Graph& g, const char* op);

}  // namespace metdim::detail
