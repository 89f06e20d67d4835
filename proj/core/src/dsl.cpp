#include "metdim/dsl.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace metdim {

SpecError::SpecError(std::size_t offset, const std::string& what)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

using Op = ConstructionSpec::Op;

struct OpInfo {
  std::string_view name;
  Op op;
  std::size_t arity;  // 0 for subdiv, which takes a nested spec
};

constexpr std::array<OpInfo, 8> kOps{{
    {"complete", Op::Complete, 1},
    {"cmm", Op::Cmm, 2},
    {"star", Op::Star, 1},
    {"cycle", Op::Cycle, 1},
    {"path", Op::Path, 1},
    {"torus", Op::Torus, 2},
    {"chain", Op::Chain, 2},
    {"subdiv", Op::Subdiv, 0},
}};

constexpr std::size_t kMaxLiteral = 1'000'000;

const OpInfo& info(Op op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i;
  }
  throw std::logic_error("unknown op");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ConstructionSpec parse() {
    auto spec = node(1);
    skip_ws();
    if (pos_ != text_.size()) throw SpecError(pos_, "unexpected trailing input");
    return spec;
  }

 private:
  ConstructionSpec node(std::size_t depth) {
    skip_ws();
    const std::size_t name_at = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == name_at) {
      if (pos_ == text_.size()) throw SpecError(pos_, "expected a constructor name, found end of input");
      throw SpecError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    const std::string_view name = text_.substr(name_at, pos_ - name_at);
    const OpInfo* op = nullptr;
    for (const auto& i : kOps) {
      if (i.name == name) op = &i;
    }
    if (!op) throw SpecError(name_at, "unknown constructor '" + std::string(name) + "'");

    ConstructionSpec spec;
    spec.op = op->op;
    expect('(');
    if (spec.op == Op::Subdiv) {
      if (depth + 1 > kMaxSpecDepth) {
        throw SpecError(name_at, "nesting deeper than " + std::to_string(kMaxSpecDepth));
      }
      spec.inner.push_back(node(depth + 1));
      expect(')');
      return spec;
    }

    std::vector<std::size_t> offsets;
    while (true) {
      skip_ws();
      offsets.push_back(pos_);
      spec.args.push_back(integer());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    if (spec.args.size() != op->arity) {
      throw SpecError(name_at, std::string(name) + " takes " + std::to_string(op->arity) +
                                   " argument(s), got " + std::to_string(spec.args.size()));
    }
    check_ranges(spec, name_at, offsets);
    return spec;
  }

  std::size_t integer() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxLiteral) throw SpecError(start, "integer literal too large");
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ == text_.size()) throw SpecError(pos_, "expected an integer, found end of input");
      throw SpecError(pos_, std::string("expected an integer, found '") + text_[pos_] + "'");
    }
    return value;
  }

  static void check_ranges(const ConstructionSpec& s, std::size_t name_at,
                           const std::vector<std::size_t>& at) {
    const auto& a = s.args;
    auto need = [](bool ok, std::size_t offset, const std::string& msg) {
      if (!ok) throw SpecError(offset, msg);
    };
    switch (s.op) {
      case Op::Complete:
        need(a[0] >= 1 && a[0] <= kMaxVertices, at[0], "complete(n) requires 1 <= n <= 4096");
        break;
      case Op::Cmm:
        need(a[0] >= 1 && a[0] <= kMaxVertices, at[0], "cmm(n,k) requires 1 <= n <= 4096");
        need(2 * a[1] <= a[0], at[1], "cmm(n,k) requires 2k <= n");
        break;
      case Op::Star:
        need(a[0] >= 2 && a[0] <= kMaxVertices, at[0], "star(n) requires 2 <= n <= 4096");
        break;
      case Op::Cycle:
        need(a[0] >= 3 && a[0] <= kMaxVertices, at[0], "cycle(n) requires 3 <= n <= 4096");
        break;
      case Op::Path:
        need(a[0] >= 1 && a[0] <= kMaxVertices, at[0], "path(n) requires 1 <= n <= 4096");
        break;
      case Op::Torus:
        need(a[0] >= 3, at[0], "torus(a,b) requires a >= 3");
        need(a[1] >= 3, at[1], "torus(a,b) requires b >= 3");
        need(a[0] * a[1] <= kMaxVertices, name_at, "torus(a,b) requires a*b <= 4096");
        break;
      case Op::Chain:
        need(a[0] >= 4, at[0],
             "chain(c1,c2) requires 4 <= c1 < c2 with c2 >= c1 + 2; c1 = " + std::to_string(a[0]) +
                 " is below 4");
        need(a[1] >= a[0] + 2, at[1],
             "chain(c1,c2) requires c2 >= c1 + 2; got c2 = " + std::to_string(a[1]));
        break;
      case Op::Subdiv:
        break;
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw SpecError(pos_, std::string("expected '") + c + "', found end of input");
    }
    if (text_[pos_] != c) {
      throw SpecError(pos_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstructionSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ConstructionSpec& spec) {
  std::string out(info(spec.op).name);
  out += '(';
  if (spec.op == Op::Subdiv) {
    out += to_string(spec.inner.at(0));
  } else {
    for (std::size_t i = 0; i < spec.args.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.args[i]);
    }
  }
  out += ')';
  return out;
}

EvaluatedSpec eval_spec(const ConstructionSpec& spec) {
  const auto& a = spec.args;
  switch (spec.op) {
    case Op::Complete: return {complete(a.at(0)), std::nullopt, std::nullopt};
    case Op::Cmm: return {complete_minus_matching(a.at(0), a.at(1)), std::nullopt, std::nullopt};
    case Op::Star: return {star(a.at(0)), std::nullopt, std::nullopt};
    case Op::Cycle: return {cycle(a.at(0)), std::nullopt, std::nullopt};
    case Op::Path: return {path(a.at(0)), std::nullopt, std::nullopt};
    case Op::Torus: return {torus(a.at(0), a.at(1)), std::nullopt, std::nullopt};
    case Op::Chain: {
      auto layout = chain(a.at(0), a.at(1));
      Graph g = layout.graph;
      return {std::move(g), std::nullopt, std::move(layout)};
    }
    case Op::Subdiv: {
      auto inner = eval_spec(spec.inner.at(0));
      auto sub = subdivide(inner.graph);
      return {std::move(sub.graph), std::move(sub.labeling), std::nullopt};
    }
  }
  throw std::logic_error("eval_spec: unhandled op");
}

}  // namespace metdim
