#include "metdim/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "metdim/constructions.hpp"
#include "metdim/dsl.hpp"
#include "metdim/graph.hpp"
#include "metdim/harness.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

namespace {

// Raised for bad input; carries the message printed before exiting with 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  Graph graph;
  std::optional<ChainLayout> chain;
  std::string source;
};

std::string caret_line(std::string_view text, std::size_t offset) {
  std::string out = "  " + std::string(text) + "\n  ";
  out.append(std::min(offset, text.size()), ' ');
  out += '^';
  return out;
}

// An existing file is read as an edge list; anything else is a construction spec.
Input load_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return {parse_edge_list(buf.str()), std::nullopt, arg};
    } catch (const EdgeListError& e) {
      throw UsageError(arg + ": " + e.what());
    }
  }
  ConstructionSpec spec;
  try {
    spec = parse_spec(arg);
  } catch (const SpecError& e) {
    throw UsageError(std::string("invalid spec: ") + e.what() + "\n" + caret_line(arg, e.offset()));
  }
  try {
    auto evaluated = eval_spec(spec);
    return {std::move(evaluated.graph), std::move(evaluated.chain), to_string(spec)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Vertex> parse_set(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in --set");
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        item.size() > 9) {
      throw UsageError("--set entry '" + item + "' is not a vertex id");
    }
    out.push_back(static_cast<Vertex>(std::stoul(item)));
  }
  return out;
}

std::string render_signature(const Signature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sig[i]);
  }
  return out + ")";
}

std::string render_object(const Graph& g, Kind kind, std::size_t object) {
  if (kind == Kind::VertexMetric) return "vertex " + std::to_string(object);
  const Edge& e = g.edge(EdgeRef{static_cast<std::uint32_t>(object)});
  return "edge " + std::to_string(object) + " (" + std::to_string(e.u) + "," +
         std::to_string(e.v) + ")";
}

Target target_of(Kind kind, std::size_t object) {
  if (kind == Kind::VertexMetric) return static_cast<Vertex>(object);
  return EdgeRef{static_cast<std::uint32_t>(object)};
}

struct DimArgs {
  std::string input;
  bool edge = false;
  bool certify = false;
  bool json = false;
  unsigned threads = 1;
  bool deterministic = false;
  std::uint64_t budget = 0;
  std::string pieces = "auto";
};

int run_dim(const DimArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load_input(a.input);
  const Kind kind = a.edge ? Kind::EdgeMetric : Kind::VertexMetric;
  if (!is_connected(in.graph)) throw UsageError("graph is disconnected");

  SolveOptions options;
  options.threads = a.deterministic ? 1 : std::max(1u, a.threads);
  options.deterministic = a.deterministic;
  options.node_budget = a.budget;
  if (a.pieces == "auto" && in.chain) {
    SolveOptions inner = options;
    options.pieces = chain_pieces(*in.chain, kind, inner);
    const bool all_certified = std::all_of(options.pieces.begin(), options.pieces.end(),
                                           [](const BoundaryPiece& p) { return p.certified; });
    if (!all_certified) {
      err << "warning: a piece ran out of budget; solving without the piece bound\n";
      options.pieces.clear();
    }
  }

  SolveResult r;
  try {
    r = exact_dimension(in.graph, kind, options);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (a.json) {
    out << to_json(r, !a.deterministic) << '\n';
  } else {
    out << (kind == Kind::VertexMetric ? "dim" : "edim") << "(" << in.source
        << ") = " << r.dimension << '\n';
    out << "witness      " << to_string(r.witness) << '\n';
    out << "certificate  " << to_string(r.certificate);
    if (r.certificate == Certificate::Certified) {
      out << " (lower bound " << r.lower_bound << " from " << to_string(r.lower_bound_source) << ")";
    }
    out << '\n';
    out << "nodes        " << r.stats.nodes << '\n';
    out << "sets checked " << r.stats.sets_checked << '\n';
    if (!a.deterministic) out << "millis       " << r.stats.millis << '\n';
  }
  if (r.certificate != Certificate::Certified) {
    err << "error: node budget exhausted; " << r.dimension << " is an upper bound only\n";
    return kExitFailure;
  }
  if (a.certify) {
    // Independent confirmation: the witness resolves, and no smaller set does.
    const auto d = all_pairs_distances(in.graph);
    if (!is_generator(in.graph, d, r.witness, kind)) {
      err << "error: witness " << to_string(r.witness) << " failed the generator check\n";
      return kExitFailure;
    }
    if (r.dimension > 0) {
      RefutationRecord ref;
      try {
        ref = certify_no_generator_of_size(in.graph, kind, r.dimension - 1, a.budget);
      } catch (const BudgetExhausted& e) {
        err << "error: refutation of size " << r.dimension - 1 << ": " << e.what() << '\n';
        return kExitFailure;
      }
      if (!ref.refuted) {
        err << "error: found a generator of size " << r.dimension - 1 << ": "
            << to_string(*ref.counterexample) << '\n';
        return kExitFailure;
      }
      (a.json ? err : out) << "refuted      " << ref.sets_refuted << " sets of size "
                           << r.dimension - 1 << '\n';
    }
  }
  return kExitOk;
}

int run_check(const std::string& input, const std::string& set_text, bool edge,
              std::ostream& out) {
  const Input in = load_input(input);
  const Kind kind = edge ? Kind::EdgeMetric : Kind::VertexMetric;
  if (!is_connected(in.graph)) throw UsageError("graph is disconnected");
  LandmarkSet set;
  try {
    set = LandmarkSet(parse_set(set_text));
    set.validate(in.graph.order());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--set: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
  const auto d = all_pairs_distances(in.graph);
  const auto check = is_generator(in.graph, d, set, kind);
  if (check) {
    out << "pass: " << to_string(set) << (edge ? " is an edge metric" : " is a metric")
        << " generator of " << in.source << '\n';
    return kExitOk;
  }
  const auto [x, y] = *check.unresolved;
  out << "fail: " << to_string(set) << " does not resolve " << render_object(in.graph, kind, x)
      << " and " << render_object(in.graph, kind, y) << "; both have signature "
      << render_signature(signature_of(in.graph, d, set, target_of(kind, x))) << '\n';
  return kExitFailure;
}

int run_construct(const std::string& spec_text, const std::string& output, std::ostream& out) {
  ConstructionSpec spec;
  try {
    spec = parse_spec(spec_text);
  } catch (const SpecError& e) {
    throw UsageError(std::string("invalid spec: ") + e.what() + "\n" +
                     caret_line(spec_text, e.offset()));
  }
  Graph g;
  try {
    g = eval_spec(spec).graph;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = serialize_edge_list(g);
  if (output.empty() || output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(output);
  if (!file) throw UsageError("cannot write '" + output + "'");
  file << text;
  return file ? kExitOk : kExitFailure;
}

int run_verify(const std::string& suite, const HarnessOptions& options, bool json,
               std::ostream& out) {
  const auto report = run_suite(suite, options);
  out << (json ? report.to_json() + "\n" : report.to_table());
  return report.pass ? kExitOk : kExitFailure;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric and edge metric dimension with certificates", "metdim"};
  app.require_subcommand(1);

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Compute dim or edim of a graph");
  dim_cmd->add_option("input", dim.input, "Edge-list file or construction spec")->required();
  dim_cmd->add_flag("--edge", dim.edge, "Edge metric dimension instead of metric dimension");
  dim_cmd->add_flag("--certify", dim.certify, "Re-check the witness and refute every smaller set");
  dim_cmd->add_flag("--json", dim.json, "Print the result as JSON");
  dim_cmd->add_option("--threads", dim.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  dim_cmd->add_flag("--deterministic", dim.deterministic,
                    "Single worker and no wall time in the output");
  dim_cmd->add_option("--budget", dim.budget, "Node budget (0 = unlimited)");
  dim_cmd->add_option("--pieces", dim.pieces, "Piece lower bound for chain inputs")
      ->check(CLI::IsMember({"auto", "none"}));

  std::string check_input, check_set;
  bool check_edge = false;
  auto* check_cmd = app.add_subcommand("check", "Check whether a landmark set is a generator");
  check_cmd->add_option("input", check_input, "Edge-list file or construction spec")->required();
  check_cmd->add_option("--set", check_set, "Comma-separated vertex ids")->required();
  check_cmd->add_flag("--edge", check_edge, "Check edge metric resolution");

  std::string construct_spec, construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "Write a construction as an edge list");
  construct_cmd->add_option("spec", construct_spec, "Construction spec")->required();
  construct_cmd->add_option("-o,--output", construct_out, "Output file (default stdout)");

  std::string suite;
  HarnessOptions harness;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--extended", harness.extended, "Include the larger instances");
  verify_cmd->add_flag("--json", verify_json, "Print the report as JSON");
  verify_cmd->add_option("--seed", harness.seed, "Seed for random corpora");
  verify_cmd->add_option("--threads", harness.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dim_cmd) return run_dim(dim, out, err);
    if (*check_cmd) return run_check(check_input, check_set, check_edge, out);
    if (*construct_cmd) return run_construct(construct_spec, construct_out, out);
    if (*verify_cmd) return run_verify(suite, harness, verify_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace metdim
