#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metdim {

struct ReportRow {
  std::string suite;
  std::string instance;
  std::string quantity;
  std::string expected;
  std::string provenance;  // where the expected value comes from
  std::string computed;
  std::string certificate;
  double millis = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportRow> rows;
  bool pass = true;
  std::uint64_t seed = 0;
  bool extended = false;

  void add(ReportRow row);
  void merge(const VerificationReport& other);

  /// {"suite","rows","pass","seed","extended"}, without wall times.
  std::string to_json() const;
  /// Fixed-width table including wall times.
  std::string to_table() const;
};

struct HarnessOptions {
  bool extended = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t node_budget = 0;
};

/// dim and edim of S(K_n) against ceil(2n/3) (3 for n = 5) and ceil((2n-2)/3).
VerificationReport verify_complete_subdivisions(const std::vector<std::size_t>& orders,
                                                const HarnessOptions& options = {});

/// dim and edim of S(K_n minus k independent edges), plus the dim - edim gap
/// (0 when 3 | n, else 1). Pairs outside n >= max(4, 3k + 4(n mod 3) - 2)
/// are reported as skipped.
VerificationReport verify_matching_deleted(
    const std::vector<std::pair<std::size_t, std::size_t>>& instances,
    const HarnessOptions& options = {});

/// Chain graphs: 2-connectivity, certified edim = c1 by candidate plus
/// refutation, dim = c2 by candidate plus piece bound, and the cross-copy
/// distances.
VerificationReport verify_chains(const std::vector<std::pair<std::size_t, std::size_t>>& instances,
                                 const HarnessOptions& options = {});

/// Packing-based generator builders on K_6, the star K_{5,1} and `trials`
/// seeded random connected graphs on 3..n_max vertices.
VerificationReport verify_packing_builders(std::size_t trials, std::size_t n_max,
                                           double edge_prob, const HarnessOptions& options = {});

/// dim = edim = n - 2 for the subdivided star on n vertices, and
/// n - 2 > ceil(2n/3) when n >= 9.
VerificationReport verify_stars(const std::vector<std::size_t>& orders,
                                const HarnessOptions& options = {});

/// dim(C_4 x C_4) = 4 and edim(C_4 x C_4) = 3.
VerificationReport verify_torus(const HarnessOptions& options = {});

/// Suite names: prop1, thm4, lemma3, bounds, star, torus, all.
/// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const HarnessOptions& options = {});

const std::vector<std::string>& suite_names();

}  // namespace metdim
