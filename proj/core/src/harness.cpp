#include "metdim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metdim/constructions.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

void VerificationReport::add(ReportRow row) {
  if (row.suite.empty()) row.suite = suite;
  pass = pass && row.pass;
  rows.push_back(std::move(row));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& row : other.rows) rows.push_back(row);
  pass = pass && other.pass;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["suite"] = r.suite;
    row["instance"] = r.instance;
    row["quantity"] = r.quantity;
    row["expected"] = r.expected;
    row["provenance"] = r.provenance;
    row["computed"] = r.computed;
    row["certificate"] = r.certificate;
    row["pass"] = r.pass;
    row["note"] = r.note;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  j["pass"] = pass;
  j["seed"] = seed;
  j["extended"] = extended;
  return j.dump(2);
}

std::string VerificationReport::to_table() const {
  std::size_t wi = 8, wq = 8, we = 8, wc = 8;
  for (const auto& r : rows) {
    wi = std::max(wi, r.instance.size());
    wq = std::max(wq, r.quantity.size());
    we = std::max(we, r.expected.size());
    wc = std::max(wc, r.computed.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(8) << "suite" << "  " << std::setw(static_cast<int>(wi))
      << "instance" << "  " << std::setw(static_cast<int>(wq)) << "quantity" << "  "
      << std::setw(static_cast<int>(we)) << "expected" << "  " << std::setw(static_cast<int>(wc))
      << "computed" << "  " << std::setw(16) << "certificate" << "  " << std::right
      << std::setw(10) << "ms" << "  result\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(8) << r.suite << "  " << std::setw(static_cast<int>(wi))
        << r.instance << "  " << std::setw(static_cast<int>(wq)) << r.quantity << "  "
        << std::setw(static_cast<int>(we)) << r.expected << "  "
        << std::setw(static_cast<int>(wc)) << r.computed << "  " << std::setw(16)
        << r.certificate << "  " << std::right << std::setw(10) << std::fixed
        << std::setprecision(1) << r.millis << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  out << (pass ? "suite " + suite + ": PASS\n" : "suite " + suite + ": FAIL\n");
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// ceil(2n/3) and ceil((2n-2)/3).
std::size_t dim_formula(std::size_t n) { return ceil_div(2 * n, 3); }
std::size_t edim_formula(std::size_t n) { return ceil_div(2 * n - 2, 3); }

SolveOptions solve_options(const HarnessOptions& o) {
  SolveOptions s;
  s.threads = std::max(1u, o.threads);
  s.deterministic = s.threads == 1;
  s.node_budget = o.node_budget;
  return s;
}

std::string cert_text(const SolveResult& r) {
  std::string out(to_string(r.certificate));
  if (r.certificate == Certificate::Certified) {
    out += '/';
    out += to_string(r.lower_bound_source);
  }
  return out;
}

// A row whose value is a solver output: passes only if certified and equal.
ReportRow solved_row(std::string instance, std::string quantity, std::size_t expected,
                     std::string provenance, const Graph& g, Kind kind,
                     const SolveOptions& options) {
  ReportRow row;
  row.instance = std::move(instance);
  row.quantity = std::move(quantity);
  row.expected = std::to_string(expected);
  row.provenance = std::move(provenance);
  const auto t0 = Clock::now();
  try {
    const auto r = exact_dimension(g, kind, options);
    row.computed = std::to_string(r.dimension);
    row.certificate = cert_text(r);
    row.pass = r.certificate == Certificate::Certified && r.dimension == expected;
    row.note = "witness " + to_string(r.witness) + ", " + std::to_string(r.stats.nodes) + " nodes";
    if (r.certificate != Certificate::Certified) row.note += ", budget exhausted";
  } catch (const std::exception& e) {
    row.computed = "error";
    row.note = e.what();
  }
  row.millis = since(t0);
  return row;
}

ReportRow value_row(std::string instance, std::string quantity, std::string expected,
                    std::string provenance, std::string computed, bool pass,
                    std::string note = {}) {
  ReportRow row;
  row.instance = std::move(instance);
  row.quantity = std::move(quantity);
  row.expected = std::move(expected);
  row.provenance = std::move(provenance);
  row.computed = std::move(computed);
  row.pass = pass;
  row.note = std::move(note);
  return row;
}

template <class F>
ReportRow timed(F&& make) {
  const auto t0 = Clock::now();
  ReportRow row = make();
  row.millis = since(t0);
  return row;
}

// Integer and coin draws computed directly from mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  bool flip(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

VerificationReport verify_complete_subdivisions(const std::vector<std::size_t>& orders,
                                                const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "prop1";
  report.seed = options.seed;
  report.extended = options.extended;
  const auto so = solve_options(options);
  for (std::size_t n : orders) {
    const std::string inst = "subdiv(complete(" + std::to_string(n) + "))";
    if (n < 4) {
      report.add(value_row(inst, "dim/edim", "n>=4", "precondition", "skipped", true,
                           "formulas apply from n = 4"));
      continue;
    }
    const Graph g = subdivide(complete(n)).graph;
    const bool exception = n == 5;
    report.add(solved_row(inst, "dim", exception ? 3 : dim_formula(n),
                          exception ? "n=5 exception" : "ceil(2n/3)", g, Kind::VertexMetric, so));
    report.add(solved_row(inst, "edim", edim_formula(n), "ceil((2n-2)/3)", g, Kind::EdgeMetric, so));
  }
  return report;
}

VerificationReport verify_matching_deleted(
    const std::vector<std::pair<std::size_t, std::size_t>>& instances,
    const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "thm4";
  report.seed = options.seed;
  report.extended = options.extended;
  const auto so = solve_options(options);
  for (const auto& [n, k] : instances) {
    const std::string inst = "subdiv(cmm(" + std::to_string(n) + "," + std::to_string(k) + "))";
    const std::size_t ell = n % 3;
    const std::size_t threshold = std::max<std::size_t>(4, 3 * k + 4 * ell >= 2 ? 3 * k + 4 * ell - 2 : 0);
    if (n < threshold || 2 * k > n) {
      report.add(value_row(inst, "dim/edim", "n>=" + std::to_string(threshold),
                           "precondition n >= max(4, 3k+4l-2)", "skipped", true,
                           "precondition not met; row not asserted"));
      continue;
    }
    const Graph g = subdivide(complete_minus_matching(n, k)).graph;
    auto dim = solved_row(inst, "dim", dim_formula(n), "ceil(2n/3)", g, Kind::VertexMetric, so);
    auto edim = solved_row(inst, "edim", edim_formula(n), "ceil((2n-2)/3)", g, Kind::EdgeMetric, so);
    const std::size_t gap_expected = n % 3 == 0 ? 0 : 1;
    const bool have_both = dim.certificate.starts_with("certified") &&
                           edim.certificate.starts_with("certified");
    std::string gap = "n/a";
    bool gap_ok = false;
    if (have_both) {
      const auto gd = std::stoll(dim.computed) - std::stoll(edim.computed);
      gap = std::to_string(gd);
      gap_ok = gd == static_cast<long long>(gap_expected);
    }
    report.add(std::move(dim));
    report.add(std::move(edim));
    report.add(value_row(inst, "dim-edim", std::to_string(gap_expected),
                         n % 3 == 0 ? "equal when 3 | n" : "differ by 1 when 3 does not divide n",
                         gap, gap_ok));
  }
  return report;
}

VerificationReport verify_chains(const std::vector<std::pair<std::size_t, std::size_t>>& instances,
                                 const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "lemma3";
  report.seed = options.seed;
  report.extended = options.extended;
  const auto so = solve_options(options);

  for (const auto& [c1, c2] : instances) {
    const std::string inst = "chain(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
    ChainLayout layout;
    try {
      layout = chain(c1, c2);
    } catch (const std::invalid_argument& e) {
      report.add(value_row(inst, "construct", "valid", "4 <= c1, c1 + 2 <= c2", "error", false,
                           e.what()));
      continue;
    }
    const Graph& g = layout.graph;
    const auto d = all_pairs_distances(g);
    const std::size_t k = layout.k;

    report.add(timed([&] {
      const auto cuts = articulation_points(g);
      return value_row(inst, "cut vertices", "0", "2-connected", std::to_string(cuts.size()),
                       cuts.empty());
    }));

    const std::size_t a = 3 * (k - 1);
    const auto far12 = d(layout.midpoint(k, 1, 2), layout.midpoint(1, 1, 2));
    const auto far45 = d(layout.midpoint(k, 1, 2), layout.midpoint(1, 4, 5));
    report.add(value_row(inst, "d(x^k_12,x^1_12)", std::to_string(a), "3(k-1)",
                         std::to_string(far12), far12 == a));
    report.add(value_row(inst, "d(x^k_12,x^1_45)", std::to_string(a + 2), "3(k-1)+2",
                         std::to_string(far45), far45 == a + 2));

    // Edge metric dimension: witness of size c1 plus refutation of c1 - 1.
    bool edge_witness = false;
    report.add(timed([&] {
      const auto cand = chain_edge_basis_candidate(layout);
      edge_witness = !cand.fallback && cand.landmarks.size() == c1;
      return value_row(inst, "edge candidate", "size " + std::to_string(c1), "c1",
                       "size " + std::to_string(cand.landmarks.size()) +
                           (cand.fallback ? " (greedy fallback)" : ""),
                       edge_witness, "landmarks " + to_string(cand.landmarks));
    }));
    bool edge_refuted = false;
    report.add(timed([&] {
      try {
        const auto ref = certify_no_generator_of_size(g, Kind::EdgeMetric, c1 - 1, options.node_budget);
        edge_refuted = ref.refuted;
        return value_row(inst, "no edge generator of size " + std::to_string(c1 - 1), "refuted",
                         "exhaustive enumeration",
                         ref.refuted ? "refuted" : "counterexample", ref.refuted,
                         std::to_string(ref.sets_refuted) + " sets refuted, " +
                             std::to_string(ref.nodes) + " nodes");
      } catch (const BudgetExhausted& e) {
        return value_row(inst, "no edge generator of size " + std::to_string(c1 - 1), "refuted",
                         "exhaustive enumeration", "inconclusive", false, e.what());
      }
    }));
    {
      auto row = value_row(inst, "edim", std::to_string(c1), "c1",
                           edge_witness && edge_refuted ? std::to_string(c1) : "unproven",
                           edge_witness && edge_refuted);
      row.certificate = "certified/exhaustion";
      report.add(std::move(row));
    }

    // Metric dimension: witness of size c2 plus the piece bound.
    bool vertex_witness = false;
    report.add(timed([&] {
      const auto cand = chain_metric_basis_candidate(layout);
      vertex_witness = !cand.fallback && cand.landmarks.size() == c2;
      return value_row(inst, "metric candidate", "size " + std::to_string(c2), "c2",
                       "size " + std::to_string(cand.landmarks.size()) +
                           (cand.fallback ? " (greedy fallback)" : ""),
                       vertex_witness, "landmarks " + to_string(cand.landmarks));
    }));

    std::vector<BoundaryPiece> pieces;
    report.add(timed([&] {
      pieces = chain_pieces(layout, Kind::VertexMetric, so);
      bool ok = true;
      std::string computed;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::size_t q = layout.copies[i].labeling.base().order();
        ok = ok && pieces[i].certified && pieces[i].dimension == dim_formula(q);
        if (i) computed += ',';
        computed += std::to_string(pieces[i].dimension);
      }
      std::string expected;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) expected += ',';
        expected += std::to_string(dim_formula(layout.copies[i].labeling.base().order()));
      }
      auto row = value_row(inst, "piece dims", expected, "ceil(2q/3) per copy", computed, ok);
      row.certificate = ok ? "certified" : "";
      return row;
    }));

    // Exhaustive confirmation for each distinct copy size.
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < layout.copies.size(); ++i) {
      const std::size_t q = layout.copies[i].labeling.base().order();
      if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
      seen.push_back(q);
      report.add(timed([&] {
        const Graph piece = induced_subgraph(g, layout.copy_vertices(i + 1));
        const std::size_t size = dim_formula(q) - 1;
        const std::string quantity =
            "S(K_" + std::to_string(q) + ") no generator of size " + std::to_string(size);
        try {
          const auto ref = certify_no_generator_of_size(piece, Kind::VertexMetric, size,
                                                        options.node_budget);
          return value_row(inst, quantity, "refuted", "exhaustive enumeration",
                           ref.refuted ? "refuted" : "counterexample", ref.refuted,
                           std::to_string(ref.sets_refuted) + " sets refuted");
        } catch (const BudgetExhausted& e) {
          return value_row(inst, quantity, "refuted", "exhaustive enumeration", "inconclusive",
                           false, e.what());
        }
      }));
    }

    std::size_t bound = 0;
    report.add(timed([&] {
      try {
        bound = piece_lower_bound(g, d, pieces, Kind::VertexMetric);
        return value_row(inst, "piece bound (vertex)", std::to_string(c2), "3+(k-2)+(c1-1)",
                         std::to_string(bound), bound == c2);
      } catch (const std::invalid_argument& e) {
        return value_row(inst, "piece bound (vertex)", std::to_string(c2), "3+(k-2)+(c1-1)",
                         "error", false, e.what());
      }
    }));
    {
      auto row = value_row(inst, "dim", std::to_string(c2), "c2",
                           vertex_witness && bound == c2 ? std::to_string(c2) : "unproven",
                           vertex_witness && bound == c2);
      row.certificate = "certified/pieces";
      report.add(std::move(row));
    }

    report.add(timed([&] {
      try {
        const auto edge_pieces = chain_pieces(layout, Kind::EdgeMetric, so);
        const auto eb = piece_lower_bound(g, d, edge_pieces, Kind::EdgeMetric);
        return value_row(inst, "piece bound (edge)", std::to_string(c1), "2+0(k-2)+(c1-2)",
                         std::to_string(eb), eb == c1);
      } catch (const std::invalid_argument& e) {
        return value_row(inst, "piece bound (edge)", std::to_string(c1), "2+0(k-2)+(c1-2)",
                         "error", false, e.what());
      }
    }));
  }
  return report;
}

namespace {

void add_builder_rows(VerificationReport& report, const std::string& inst, const Graph& base) {
  const std::size_t n = base.order();
  const auto sub = subdivide(base);
  const auto d = all_pairs_distances(sub.graph);

  report.add(timed([&] {
    const auto packing = find_p3_packing(base, n / 3);
    if (!packing) {
      return value_row(inst, "metric builder", "vacuous or pass", "packing of floor(n/3)",
                       "vacuous", true, "no packing of " + std::to_string(n / 3) + " paths");
    }
    const auto built = packing_metric_generator(sub.labeling, *packing);
    const bool gen = static_cast<bool>(is_generator(sub.graph, d, built.landmarks, Kind::VertexMetric));
    const bool size_ok = built.landmarks.size() == dim_formula(n);
    return value_row(inst, "metric builder", "size " + std::to_string(dim_formula(n)),
                     "ceil(2n/3)",
                     "size " + std::to_string(built.landmarks.size()) +
                         (gen ? ", generator" : ", NOT a generator"),
                     gen && size_ok);
  }));
  report.add(timed([&] {
    const std::size_t need = (n - 1) / 3;
    const auto packing = find_p3_packing(base, need);
    if (!packing) {
      return value_row(inst, "edge builder", "vacuous or pass", "packing of floor((n-1)/3)",
                       "vacuous", true, "no packing of " + std::to_string(need) + " paths");
    }
    const auto built = packing_edge_generator(sub.labeling, *packing);
    const bool gen = static_cast<bool>(is_generator(sub.graph, d, built.landmarks, Kind::EdgeMetric));
    const bool size_ok = built.landmarks.size() == edim_formula(n);
    return value_row(inst, "edge builder", "size " + std::to_string(edim_formula(n)),
                     "ceil((2n-2)/3)",
                     "size " + std::to_string(built.landmarks.size()) +
                         (gen ? ", generator" : ", NOT a generator"),
                     gen && size_ok);
  }));
}

}  // namespace

VerificationReport verify_packing_builders(std::size_t trials, std::size_t n_max,
                                           double edge_prob, const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "bounds";
  report.seed = options.seed;
  report.extended = options.extended;
  add_builder_rows(report, "complete(6)", complete(6));
  add_builder_rows(report, "star(6)", star(6));

  Rng rng(options.seed);
  const std::size_t hi = std::max<std::size_t>(3, n_max);
  for (std::size_t t = 0; t < trials; ++t) {
    Graph g;
    std::size_t n = 0;
    do {
      n = rng.uniform(3, hi);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (rng.flip(edge_prob)) edges.push_back({u, v});
        }
      }
      g = Graph::from_edges(n, std::move(edges));
    } while (!is_connected(g));
    add_builder_rows(report,
                     "random#" + std::to_string(t) + " n=" + std::to_string(n) +
                         " m=" + std::to_string(g.size()),
                     g);
  }
  return report;
}

VerificationReport verify_stars(const std::vector<std::size_t>& orders,
                                const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "star";
  report.seed = options.seed;
  report.extended = options.extended;
  const auto so = solve_options(options);
  for (std::size_t n : orders) {
    const std::string inst = "subdiv(star(" + std::to_string(n) + "))";
    const Graph g = subdivide(star(n)).graph;
    auto dim = solved_row(inst, "dim", n - 2, "n-2", g, Kind::VertexMetric, so);
    auto edim = solved_row(inst, "edim", n - 2, "n-2", g, Kind::EdgeMetric, so);
    const bool asserted = n >= 9;
    if (!asserted) {
      // Values are recorded, not asserted, below the stated range.
      dim.pass = edim.pass = dim.certificate.starts_with("certified") &&
                             edim.certificate.starts_with("certified");
      dim.note = edim.note = "recorded only (n < 9)";
    }
    const bool dim_certified = dim.certificate.starts_with("certified");
    const std::string computed_dim = dim.computed;
    report.add(std::move(dim));
    report.add(std::move(edim));
    if (asserted) {
      const bool gt = dim_certified && std::stoull(computed_dim) > dim_formula(n);
      report.add(value_row(inst, "dim > ceil(2n/3)",
                           std::to_string(n - 2) + " > " + std::to_string(dim_formula(n)),
                           "n >= 9", computed_dim + " vs " + std::to_string(dim_formula(n)), gt));
    }
  }
  return report;
}

VerificationReport verify_torus(const HarnessOptions& options) {
  VerificationReport report;
  report.suite = "torus";
  report.seed = options.seed;
  report.extended = options.extended;
  const auto so = solve_options(options);
  const Graph g = torus(4, 4);
  report.add(value_row("torus(4,4)", "order", "16", "4*4", std::to_string(g.order()),
                       g.order() == 16));
  report.add(solved_row("torus(4,4)", "dim", 4, "known value", g, Kind::VertexMetric, so));
  report.add(solved_row("torus(4,4)", "edim", 3, "known value", g, Kind::EdgeMetric, so));
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop1", "thm4", "lemma3", "bounds",
                                              "star",  "torus", "all"};
  return names;
}

VerificationReport run_suite(std::string_view name, const HarnessOptions& options) {
  const bool ext = options.extended;
  if (name == "prop1") {
    std::vector<std::size_t> orders{4, 5, 6, 7, 8};
    if (ext) orders.insert(orders.end(), {9, 10});
    return verify_complete_subdivisions(orders, options);
  }
  if (name == "thm4") {
    std::vector<std::pair<std::size_t, std::size_t>> inst{{7, 1}, {9, 1}, {7, 0}};
    if (ext) inst.insert(inst.end(), {{10, 1}, {10, 2}});
    return verify_matching_deleted(inst, options);
  }
  if (name == "lemma3") {
    std::vector<std::pair<std::size_t, std::size_t>> inst{{4, 6}};
    if (ext) inst.insert(inst.end(), {{4, 7}, {5, 7}});
    return verify_chains(inst, options);
  }
  if (name == "bounds") return verify_packing_builders(200, 12, 0.5, options);
  if (name == "star") {
    std::vector<std::size_t> orders{9};
    if (ext) orders.push_back(10);
    return verify_stars(orders, options);
  }
  if (name == "torus") return verify_torus(options);
  if (name == "all") {
    VerificationReport all;
    all.suite = "all";
    all.seed = options.seed;
    all.extended = ext;
    for (const auto& s : suite_names()) {
      if (s != "all") all.merge(run_suite(s, options));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace metdim
