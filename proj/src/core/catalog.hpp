#pragma once

// The bundled link table: one [link] block per algebraically split link and
// one [knot] block per component knot type, in a line-oriented key = value
// format.

#include "core/diagram.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

struct IntInterval {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
  bool operator==(const IntInterval&) const = default;
};

struct LinkRecord {
  std::string name_t;
  std::string name_r;
  std::string pd;
  LinkDiagram diagram;
  std::vector<std::string> components;
  int u = 0;
  int arf = 0;
  IntInterval g4;
  std::optional<int> mu1122_ref;
  std::optional<int> sum_udelta_ref;
  std::vector<int> udelta_expected;  // one value, or the possible values
  std::vector<std::string> methods_expected;
  bool toroidal_obstruction = false;
  std::optional<std::filesystem::path> annular;  // resolved against the catalog directory
};

struct KnotRecord {
  std::string name;
  std::string pd;
  LinkDiagram diagram;
  int udelta = 0;
  int arf = 0;
};

class Catalog {
 public:
  /// Parses and validates every record. Throws ParseError or ValidationError
  /// naming the record and field.
  static Catalog parse(std::string_view text, const std::filesystem::path& directory);
  static Catalog load(const std::filesystem::path& path);
  /// $DELTA_LINK_CATALOG when set, else the bundled dataset.
  static std::filesystem::path default_path();

  const std::vector<LinkRecord>& links() const { return links_; }
  const std::vector<KnotRecord>& knots() const { return knots_; }
  const std::filesystem::path& directory() const { return directory_; }

  /// Lookup by Thistlethwaite or Rolfsen name; nullptr when absent.
  const LinkRecord* find_link(std::string_view name) const;
  const KnotRecord* find_knot(std::string_view name) const;
  const KnotRecord& knot(std::string_view name) const;

  /// Sorted `pathways/*.path` files next to the dataset.
  std::vector<std::filesystem::path> pathway_files() const;

 private:
  std::vector<LinkRecord> links_;
  std::vector<KnotRecord> knots_;
  std::filesystem::path directory_;
};

/// Value grammars shared by the dataset and the CSV report.
int parse_int_value(std::string_view text);
IntInterval parse_interval(std::string_view text);         // "lo..hi" or "n"
std::vector<int> parse_alternatives(std::string_view text);  // "a|b" or "n"
std::vector<std::string> parse_list(std::string_view text);  // comma separated
bool parse_bool(std::string_view text);

std::string format_interval(const IntInterval& i);
std::string format_alternatives(const std::vector<int>& v, std::string_view sep = "|");

/// Known tags of the methods column.
const std::vector<std::string>& method_tags();

enum class CheckSeverity { Pass, Note, Fail };

struct CheckLine {
  std::string record;
  std::string field;
  std::string expected;
  std::string computed;
  CheckSeverity severity = CheckSeverity::Pass;
};

/// Recomputes mu(1122) and component knot types from the diagrams and compares
/// them with the recorded values; also checks the mod-2 relation
/// arf(L) = arf(L1) + arf(L2) + mu(1122) and fingerprint uniqueness.
std::vector<CheckLine> validate_against_computation(const Catalog& catalog);

}  // namespace deltalink
