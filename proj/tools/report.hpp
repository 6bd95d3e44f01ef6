#pragma once

#include "adet/combinatorics.hpp"
#include "adet/matrix.hpp"
#include "adet/poly.hpp"
#include "adet/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace adet::cli {

struct ReportRow {
  Partition lambda;
  std::uint64_t kostka = 0;
  std::size_t generic_multiplicity = 0;
  PolyQ trace;
  std::optional<PolyMatrix> transition;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Multiplicities at one value of alpha, one entry per row of the report.
struct Specialization {
  Rational alpha;
  std::vector<std::size_t> multiplicities;

  friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// Brute-force multiplicities from the module construction.
struct OracleSection {
  std::vector<std::size_t> generic;
  std::vector<Specialization> specializations;
  bool agrees = false;

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct DecompositionReport {
  int n = 0;
  int l = 0;
  std::vector<ReportRow> rows;  // reverse lexicographic in lambda
  std::vector<Specialization> alpha_specializations;
  std::optional<OracleSection> oracle;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

/// Builds the table for every lambda |- nl with at most n parts. Rows are
/// computed independently (in parallel when OpenMP is available) and stored in
/// lambda order.
DecompositionReport build_report(int n, int l, const std::vector<Rational>& alphas,
                                 bool with_matrices, bool with_oracle, int cap);

nlohmann::json poly_to_json(const PolyQ& p);
PolyQ poly_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecompositionReport& r);
/// Throws ParseError on a malformed document.
DecompositionReport report_from_json(const nlohmann::json& j);

void write_text(std::ostream& out, const DecompositionReport& r);
void write_csv(std::ostream& out, const DecompositionReport& r);

/// "(3,1)"
std::string paren(const Partition& p);

} // namespace adet::cli
