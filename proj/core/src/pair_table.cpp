#include "pair_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace metdim::detail {

namespace {
// 64 Mi words (512 MiB) of pair masks.
constexpr std::size_t kMaxPairWords = std::size_t{1} << 26;
}  // namespace

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(op) + ": graph is disconnected");
}

ObjectDistances ObjectDistances::build(const Graph& g, const DistanceMatrix& d, Kind kind) {
  ObjectDistances od;
  od.n_ = g.order();
  od.objects_ = object_count(g, kind);
  od.table_.resize(od.objects_ * od.n_);
  for (std::size_t o = 0; o < od.objects_; ++o) {
    auto* out = od.table_.data() + o * od.n_;
    if (kind == Kind::VertexMetric) {
      for (Vertex v = 0; v < od.n_; ++v) out[v] = d(static_cast<Vertex>(o), v);
    } else {
      const Edge& e = g.edges()[o];
      for (Vertex v = 0; v < od.n_; ++v) out[v] = std::min(d(e.u, v), d(e.v, v));
    }
  }
  return od;
}

PairTable PairTable::build(const ObjectDistances& od) {
  PairTable pt;
  pt.n_ = od.vertices();
  pt.words_ = words_for(pt.n_);
  const std::size_t objects = od.objects();
  const std::size_t pairs = objects < 2 ? 0 : objects * (objects - 1) / 2;
  if (pairs * pt.words_ > kMaxPairWords) {
    throw std::length_error("pair table for " + std::to_string(objects) +
                            " objects exceeds the solver memory cap");
  }

  std::vector<Word> masks(pairs * pt.words_, 0);
  std::vector<std::uint32_t> first(pairs), second(pairs), weight(pairs);
  std::vector<Vertex> max_vertex(pairs, 0);
  std::size_t p = 0;
  for (std::size_t a = 0; a < objects; ++a) {
    const auto ra = od.row(a);
    for (std::size_t b = a + 1; b < objects; ++b, ++p) {
      const auto rb = od.row(b);
      Word* m = masks.data() + p * pt.words_;
      std::uint32_t count = 0;
      for (Vertex v = 0; v < pt.n_; ++v) {
        if (ra[v] != rb[v]) {
          m[v >> 6] |= Word{1} << (v & 63);
          ++count;
          max_vertex[p] = v;
        }
      }
      first[p] = static_cast<std::uint32_t>(a);
      second[p] = static_cast<std::uint32_t>(b);
      weight[p] = count;
    }
  }

  std::vector<std::size_t> order(pairs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Pairs are generated in (first, second) order, so a stable sort on weight
  // keeps that as the tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return weight[x] < weight[y]; });

  pt.masks_.resize(masks.size());
  pt.first_.resize(pairs);
  pt.second_.resize(pairs);
  pt.weight_.resize(pairs);
  pt.max_vertex_.resize(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t src = order[i];
    std::copy_n(masks.begin() + static_cast<std::ptrdiff_t>(src * pt.words_), pt.words_,
                pt.masks_.begin() + static_cast<std::ptrdiff_t>(i * pt.words_));
    pt.first_[i] = first[src];
    pt.second_[i] = second[src];
    pt.weight_[i] = weight[src];
    pt.max_vertex_[i] = max_vertex[src];
  }
  return pt;
}

}  // namespace metdim::detail
