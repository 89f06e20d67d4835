#include <algorithm>
#include <numeric>
#include <set>

#include "metdim/constructions.hpp"

namespace metdim {

namespace {

class PackingSearch {
 public:
  PackingSearch(const Graph& g, std::size_t count) : g_(g), count_(count), used_(g.order(), 0) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  }

  std::optional<P3Packing> run() {
    if (rec(0)) return packing_;
    return std::nullopt;
  }

 private:
  // Middles are taken in `order_` position order, so each packing is met once.
  bool rec(std::size_t pos) {
    if (packing_.size() == count_) return true;
    if (free_ < 3 * (count_ - packing_.size())) return false;
    auto key = state_key(pos);
    if (failed_.contains(key)) return false;

    for (std::size_t i = pos; i < order_.size(); ++i) {
      const Vertex b = order_[i];
      if (used_[b]) continue;
      std::vector<Vertex> open;
      for (Vertex w : g_.neighbors(b)) {
        if (!used_[w]) open.push_back(w);
      }
      for (std::size_t x = 0; x < open.size(); ++x) {
        for (std::size_t y = x + 1; y < open.size(); ++y) {
          take(open[x], b, open[y], 1);
          packing_.push_back({open[x], b, open[y]});
          if (rec(i + 1)) return true;
          packing_.pop_back();
          take(open[x], b, open[y], 0);
        }
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  void take(Vertex a, Vertex b, Vertex c, char flag) {
    used_[a] = used_[b] = used_[c] = flag;
    if (flag) {
      free_ -= 3;
    } else {
      free_ += 3;
    }
  }

  std::vector<std::uint64_t> state_key(std::size_t pos) const {
    std::vector<std::uint64_t> key((used_.size() + 63) / 64 + 1, 0);
    for (std::size_t v = 0; v < used_.size(); ++v) {
      if (used_[v]) key[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    key.back() = pos;
    return key;
  }

  const Graph& g_;
  std::size_t count_;
  std::vector<Vertex> order_;
  std::vector<char> used_;
  std::size_t free_ = g_.order();
  P3Packing packing_;
  std::set<std::vector<std::uint64_t>> failed_;
};

}  // namespace

std::optional<P3Packing> find_p3_packing(const Graph& g, std::size_t count) {
  return PackingSearch(g, count).run();
}

void validate_packing(const Graph& g, const P3Packing& packing) {
  std::vector<char> seen(g.order(), 0);
  for (const P3& t : packing) {
    for (Vertex v : {t.a, t.b, t.c}) {
      if (v >= g.order()) throw std::invalid_argument("packing vertex out of range");
      if (seen[v]) throw std::invalid_argument("packing triples overlap at vertex " + std::to_string(v));
      seen[v] = 1;
    }
    if (!g.has_edge(t.a, t.b) || !g.has_edge(t.b, t.c)) {
      throw std::invalid_argument("packing triple is not a path of the base graph");
    }
  }
}

namespace {

// Packed triples first, then leftover base vertices in id order.
std::vector<Vertex> packing_numbering(const Graph& base, const P3Packing& packing,
                                      std::size_t triples) {
  std::vector<Vertex> numbering;
  std::vector<char> placed(base.order(), 0);
  for (std::size_t t = 0; t < triples; ++t) {
    for (Vertex v : {packing[t].a, packing[t].b, packing[t].c}) {
      numbering.push_back(v);
      placed[v] = 1;
    }
  }
  for (Vertex v = 0; v < base.order(); ++v) {
    if (!placed[v]) numbering.push_back(v);
  }
  return numbering;
}

BuiltGenerator build_from_packing(const SubdivisionLabeling& labeling, const P3Packing& packing,
                                  std::size_t triples, std::size_t tail_from,
                                  std::size_t tail_to) {
  const Graph& base = labeling.base();
  if (packing.size() < triples) {
    throw std::invalid_argument("packing has " + std::to_string(packing.size()) +
                                " paths, " + std::to_string(triples) + " required");
  }
  validate_packing(base, packing);

  BuiltGenerator out;
  out.numbering = packing_numbering(base, packing, triples);
  const auto& num = out.numbering;
  std::vector<Vertex> ids;
  for (std::size_t t = 0; t < triples; ++t) {
    ids.push_back(*labeling.midpoint(num[3 * t], num[3 * t + 1]));
    ids.push_back(*labeling.midpoint(num[3 * t + 1], num[3 * t + 2]));
  }
  // Positions tail_from..tail_to (1-based, inclusive) join as original vertices.
  for (std::size_t p = tail_from; p <= tail_to; ++p) ids.push_back(labeling.original(num[p - 1]));
  out.landmarks = LandmarkSet(std::move(ids));
  return out;
}

}  // namespace

BuiltGenerator packing_metric_generator(const SubdivisionLabeling& labeling,
                                        const P3Packing& packing) {
  const std::size_t n = labeling.base().order();
  const std::size_t triples = n / 3;
  switch (n % 3) {
    case 0: return build_from_packing(labeling, packing, triples, 1, 0);
    case 1: return build_from_packing(labeling, packing, triples, n, n);
    default: return build_from_packing(labeling, packing, triples, n - 1, n);
  }
}

BuiltGenerator packing_edge_generator(const SubdivisionLabeling& labeling,
                                      const P3Packing& packing) {
  const std::size_t n = labeling.base().order();
  if (n == 0) throw std::invalid_argument("base graph has no vertices");
  const std::size_t triples = (n - 1) / 3;
  switch (n % 3) {
    case 1: return build_from_packing(labeling, packing, triples, 1, 0);
    case 2: return build_from_packing(labeling, packing, triples, n - 1, n - 1);
    default: return build_from_packing(labeling, packing, triples, n - 2, n - 1);
  }
}

}  // namespace metdim
