// Branch and bound for minimum (edge) metric generators.
//
// A landmark set is a generator iff it hits, for every pair of objects, the
// set of vertices separating that pair. The search fixes a target size and
// repeatedly branches on the unresolved pair with the fewest still-allowed
// separators: child i takes candidate c_i and forbids c_1..c_{i-1}. A node is
// pruned when some pair has no allowed separator left or when a greedy
// packing of pairwise-disjoint separator sets needs more landmarks than
// remain.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "metdim/resolver.hpp"
#include "pair_table.hpp"

namespace metdim {

namespace {

using detail::PairTable;
using detail::Word;

enum class Status { NotFound, Found, OutOfBudget, Stopped };

struct Shared {
  Shared(const PairTable& p, std::size_t t, std::uint64_t b) : pairs(p), target(t), budget(b) {}

  const PairTable& pairs;
  std::size_t target;
  std::uint64_t budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
  std::mutex mutex;
  std::optional<std::size_t> found_task;
  std::vector<Vertex> found;
};

class Worker {
 public:
  explicit Worker(Shared& shared)
      : s_(shared),
        pt_(shared.pairs),
        words_(pt_.words()),
        excluded_(words_, 0),
        cover_(words_, 0),
        lists_(shared.target + 2) {}

  Status run_task(const std::vector<std::uint32_t>& root_pairs,
                  std::span<const Vertex> candidates, std::size_t task) {
    for (std::size_t i = 0; i < task; ++i) detail::set_bit(excluded_, candidates[i]);
    const Vertex v = candidates[task];
    lists_[1].clear();
    for (auto p : root_pairs) {
      if (!pt_.separates(p, v)) lists_[1].push_back(p);
    }
    chosen_.assign(1, v);
    const Status st = dfs(1);
    std::fill(excluded_.begin(), excluded_.end(), 0);
    return st;
  }

  // Bound check plus choice of branching pair for the list at `depth`.
  // Returns false when the node is infeasible.
  bool evaluate(std::size_t depth, std::size_t& best_pair) {
    const auto& unresolved = lists_[depth];
    const std::size_t remaining = s_.target - chosen_.size();
    std::fill(cover_.begin(), cover_.end(), 0);
    std::size_t packed = 0;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (auto p : unresolved) {
      const auto m = pt_.mask(p);
      std::size_t count = 0;
      bool disjoint = true;
      for (std::size_t w = 0; w < words_; ++w) {
        const Word a = m[w] & ~excluded_[w];
        count += static_cast<std::size_t>(std::popcount(a));
        if (a & cover_[w]) disjoint = false;
      }
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best_pair = p;
      }
      if (disjoint) {
        if (++packed > remaining) return false;
        for (std::size_t w = 0; w < words_; ++w) cover_[w] |= m[w] & ~excluded_[w];
      }
    }
    return true;
  }

  std::vector<Vertex> candidates_of(std::size_t p) const {
    std::vector<Vertex> out;
    const auto m = pt_.mask(p);
    for (std::size_t w = 0; w < words_; ++w) {
      Word a = m[w] & ~excluded_[w];
      while (a) {
        out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(a))));
        a &= a - 1;
      }
    }
    return out;
  }

  std::vector<std::uint32_t>& list(std::size_t depth) { return lists_[depth]; }
  const std::vector<Vertex>& chosen() const { return chosen_; }

  Status dfs(std::size_t depth) {
    if (s_.stop.load(std::memory_order_relaxed)) return Status::Stopped;
    const auto visited = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (s_.budget != 0 && visited > s_.budget) {
      s_.out_of_budget = true;
      return Status::OutOfBudget;
    }
    const auto& unresolved = lists_[depth];
    if (unresolved.empty()) {
      s_.leaves.fetch_add(1, std::memory_order_relaxed);
      return Status::Found;
    }
    if (chosen_.size() == s_.target) {
      s_.leaves.fetch_add(1, std::memory_order_relaxed);
      return Status::NotFound;
    }
    std::size_t best = 0;
    if (!evaluate(depth, best)) return Status::NotFound;

    const auto candidates = candidates_of(best);
    auto& next = lists_[depth + 1];
    Status result = Status::NotFound;
    std::size_t used = 0;
    for (Vertex v : candidates) {
      next.clear();
      for (auto p : unresolved) {
        if (!pt_.separates(p, v)) next.push_back(p);
      }
      chosen_.push_back(v);
      const Status st = dfs(depth + 1);
      if (st != Status::NotFound) {
        result = st;
        break;
      }
      chosen_.pop_back();
      detail::set_bit(excluded_, v);
      ++used;
    }
    for (std::size_t i = 0; i < used; ++i) detail::clear_bit(excluded_, candidates[i]);
    return result;
  }

 private:
  Shared& s_;
  const PairTable& pt_;
  std::size_t words_;
  std::vector<Word> excluded_;
  std::vector<Word> cover_;
  std::vector<std::vector<std::uint32_t>> lists_;
  std::vector<Vertex> chosen_;
};

struct LevelOutcome {
  Status status = Status::NotFound;
  std::vector<Vertex> witness;
};

// Looks for a generator of exactly `target` landmarks (or fewer, which the
// caller has already ruled out).
LevelOutcome search_level(const PairTable& pt, std::size_t target, unsigned threads,
                          std::uint64_t budget, SolveStats& stats) {
  Shared shared(pt, target, budget);
  shared.nodes = stats.nodes;
  LevelOutcome out;

  Worker root(shared);
  auto& all = root.list(0);
  all.resize(pt.size());
  for (std::size_t p = 0; p < pt.size(); ++p) all[p] = static_cast<std::uint32_t>(p);

  shared.nodes.fetch_add(1);
  if (budget != 0 && shared.nodes.load() > budget) {
    out.status = Status::OutOfBudget;
  } else if (all.empty()) {
    out.status = Status::Found;
  } else if (target == 0) {
    out.status = Status::NotFound;
  } else {
    std::size_t best = 0;
    if (root.evaluate(0, best)) {
      const auto candidates = root.candidates_of(best);
      std::atomic<std::size_t> next_task{0};
      auto work = [&] {
        Worker worker(shared);
        while (true) {
          const std::size_t task = next_task.fetch_add(1);
          if (task >= candidates.size() || shared.stop.load()) return;
          const Status st = worker.run_task(all, candidates, task);
          if (st == Status::Found) {
            std::lock_guard lock(shared.mutex);
            if (!shared.found_task || task < *shared.found_task) {
              shared.found_task = task;
              shared.found = worker.chosen();
            }
            shared.stop = true;
          } else if (st == Status::OutOfBudget) {
            shared.stop = true;
          }
        }
      };
      const unsigned workers =
          std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(candidates.size())));
      if (workers == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
      }
      if (shared.found_task) {
        out.status = Status::Found;
        out.witness = shared.found;
      } else if (shared.out_of_budget) {
        out.status = Status::OutOfBudget;
      }
    }
  }
  stats.nodes = shared.nodes.load();
  stats.sets_checked += shared.leaves.load();
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t f = n - k + i;
    // r * f is divisible by i; split the division to delay overflow.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g, ff = f / (i / g);
    if (ff != 0 && rr > kMax / ff) return kMax;
    r = rr * ff;
  }
  return r;
}

}  // namespace

SolveResult exact_dimension(const Graph& g, Kind kind, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_connected(g, "exact_dimension");

  SolveResult result;
  result.kind = kind;
  const std::size_t objects = object_count(g, kind);
  if (objects < 2) {
    // The empty set already tells a lone object apart.
    result.certificate = Certificate::Certified;
    result.stats.millis = elapsed_ms(start);
    return result;
  }

  const auto d = all_pairs_distances(g);
  const auto od = detail::ObjectDistances::build(g, d, kind);
  const auto pt = PairTable::build(od);
  const LandmarkSet greedy = greedy_generator(g, d, kind);

  std::size_t first_level = 1;
  LowerBoundSource structural_source = LowerBoundSource::Trivial;
  if (options.structural_bounds) {
    const std::size_t twins = detail::twin_bound(pt, objects);
    const std::size_t pieces =
        options.pieces.empty() ? 0 : piece_lower_bound(g, d, options.pieces, kind);
    if (twins > first_level) {
      first_level = twins;
      structural_source = LowerBoundSource::Twins;
    }
    if (pieces > first_level) {
      first_level = pieces;
      structural_source = LowerBoundSource::Pieces;
    }
  }
  first_level = std::min(first_level, greedy.size());

  const unsigned threads = options.deterministic ? 1u : std::max(1u, options.threads);
  for (std::size_t level = first_level; level <= greedy.size(); ++level) {
    const auto outcome = search_level(pt, level, threads, options.node_budget, result.stats);
    if (outcome.status == Status::Found) {
      result.dimension = outcome.witness.size();
      result.witness = LandmarkSet(outcome.witness);
      result.certificate = Certificate::Certified;
      result.lower_bound = level;
      result.lower_bound_source =
          level > first_level ? LowerBoundSource::Exhaustion : structural_source;
      break;
    }
    if (outcome.status == Status::OutOfBudget) {
      result.dimension = greedy.size();
      result.witness = greedy;
      result.certificate = Certificate::UpperBoundOnly;
      result.lower_bound = level;
      result.lower_bound_source =
          level > first_level ? LowerBoundSource::Exhaustion : structural_source;
      break;
    }
  }
  if (result.witness.empty()) {
    throw std::logic_error("exact_dimension: search missed the greedy witness");
  }
  result.stats.millis = elapsed_ms(start);
  return result;
}

RefutationRecord certify_no_generator_of_size(const Graph& g, Kind kind, std::size_t size,
                                              std::uint64_t node_budget) {
  detail::require_connected(g, "certify_no_generator_of_size");
  RefutationRecord record;
  record.kind = kind;
  record.size = size;

  const std::size_t n = g.order();
  if (size > n) {
    record.refuted = true;
    return record;
  }
  const auto d = all_pairs_distances(g);
  const auto od = detail::ObjectDistances::build(g, d, kind);
  const auto pt = PairTable::build(od);
  const std::size_t words = pt.words();

  // suffix[i] marks vertices >= i.
  std::vector<Word> suffix((n + 1) * words, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::copy_n(suffix.begin() + static_cast<std::ptrdiff_t>((i + 1) * words), words,
                suffix.begin() + static_cast<std::ptrdiff_t>(i * words));
    suffix[i * words + (i >> 6)] |= Word{1} << (i & 63);
  }

  std::vector<std::vector<std::uint32_t>> lists(size + 1);
  lists[0].resize(pt.size());
  for (std::size_t p = 0; p < pt.size(); ++p) lists[0][p] = static_cast<std::uint32_t>(p);
  std::vector<Word> cover(words);
  std::vector<Vertex> chosen;
  bool found = false;

  auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    if (node_budget != 0 && record.nodes >= node_budget) {
      throw BudgetExhausted("certify_no_generator_of_size: node budget exhausted after " +
                            std::to_string(record.nodes) + " nodes");
    }
    ++record.nodes;
    const auto& unresolved = lists[depth];
    const std::size_t remaining = size - depth;
    if (unresolved.empty()) {
      found = true;
      return;
    }
    if (remaining == 0) {
      ++record.sets_refuted;
      return;
    }
    const Word* allowed = suffix.data() + from * words;
    std::fill(cover.begin(), cover.end(), 0);
    std::size_t packed = 0;
    bool dead = false;
    for (auto p : unresolved) {
      const auto m = pt.mask(p);
      bool any = false;
      bool disjoint = true;
      for (std::size_t w = 0; w < words; ++w) {
        const Word a = m[w] & allowed[w];
        any |= a != 0;
        if (a & cover[w]) disjoint = false;
      }
      if (!any) {
        dead = true;
        break;
      }
      if (disjoint) {
        if (++packed > remaining) {
          dead = true;
          break;
        }
        for (std::size_t w = 0; w < words; ++w) cover[w] |= m[w] & allowed[w];
      }
    }
    if (dead) {
      record.sets_refuted += binomial(n - from, remaining);
      return;
    }
    for (std::size_t v = from; v + remaining <= n; ++v) {
      auto& next = lists[depth + 1];
      next.clear();
      for (auto p : unresolved) {
        if (!pt.separates(p, static_cast<Vertex>(v))) next.push_back(p);
      }
      chosen.push_back(static_cast<Vertex>(v));
      self(self, v + 1, depth + 1);
      if (found) return;
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);

  if (found) {
    // Pad a smaller generator up to the requested size with the next free ids.
    LandmarkSet witness(chosen);
    for (Vertex v = 0; witness.size() < size; ++v) witness.insert(v);
    record.counterexample = std::move(witness);
    record.refuted = false;
  } else {
    record.refuted = true;
  }
  return record;
}

}  // namespace metdim
