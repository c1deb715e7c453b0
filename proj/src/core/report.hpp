#pragma once

// Regenerates the link table: per-row bounds, the shortest verified pathway,
// and a diff against the recorded expectations.

#include "core/bounds.hpp"
#include "core/catalog.hpp"
#include "core/pathways.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

struct CertificateResult {
  std::string file;
  std::string pathway;
  char level = 'a';
  bool passed = false;
  std::vector<StepCheck> failures;
};

/// Verifies every bundled certificate, at level b when all steps carry
/// sites and at level a otherwise.
std::vector<CertificateResult> verify_bundled_certificates(const Catalog& catalog, PathwayGraph* graph = nullptr);

struct TableRow {
  std::string name_t;
  std::string name_r;
  std::vector<std::string> components;
  int u = 0;
  int arf = 0;
  IntInterval g4;
  std::optional<long long> mu1122;
  std::optional<int> beta1;
  bool beta1_obstruction = false;
  BoundReport bounds;
  std::vector<std::string> route;
};

struct TableDiff {
  std::string record;
  std::string field;
  std::string expected;
  std::string computed;
};

struct Table {
  std::vector<TableRow> rows;
  std::vector<TableDiff> diffs;
  std::vector<CheckLine> notes;
  std::vector<CertificateResult> certificates;
  bool clean() const { return diffs.empty(); }
};

/// Bound report for one record, using the verified pathway graph for the
/// upper bound and the annular data for the beta1 obstruction.
TableRow table_row(const Catalog& catalog, const LinkRecord& record, const PathwayGraph& graph);
Table build_table(const Catalog& catalog);

std::string render_markdown(const Table& t);
std::string render_csv(const Table& t);
std::string render_diffs(const Table& t);

/// The CSV report read back through the dataset value grammars.
struct CsvRow {
  std::string name_t;
  std::string name_r;
  std::vector<std::string> components;
  int u = 0;
  int arf = 0;
  IntInterval g4;
  std::optional<int> mu1122;
  std::optional<int> beta1;
  int lower = 0;
  std::optional<int> upper;
  std::vector<int> udelta;
  std::vector<std::string> methods;
  std::vector<std::string> route;
};

std::vector<CsvRow> parse_csv(std::string_view text);

}  // namespace deltalink
