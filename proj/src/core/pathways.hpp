#pragma once

// Delta-pathway certificates: a chain of link names, each step optionally
// carrying a diagram of its source link and the site of the move.

#include "core/alexander.hpp"
#include "core/catalog.hpp"
#include "core/diagram.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

/// A resolved pathway node.
struct Node {
  std::string name;
  LinkDiagram diagram;
  std::optional<int> arf;
  std::optional<IntInterval> g4;
  bool trivial = false;
  Fingerprint fingerprint;
};

/// Resolves `A`, `mA` (mirror image), `0_1^k` and split unions `A#B`.
/// Throws LookupError for unknown names.
Node resolve_node(std::string_view name, const Catalog& catalog);
/// A node given directly by a diagram.
Node make_node(std::string name, LinkDiagram diagram, std::optional<int> arf = std::nullopt,
               std::optional<IntInterval> g4 = std::nullopt);

struct Step {
  std::string pd;
  LinkDiagram diagram;
  std::array<int, 3> site{};  // 0-based crossing indices
};

struct PathwayCertificate {
  std::vector<Node> nodes;
  std::vector<std::optional<Step>> steps;  // one per consecutive pair of nodes

  std::size_t num_steps() const { return steps.size(); }
  bool has_all_steps() const;
  std::string description() const;  // "A -> B -> C"
};

/// Parses every `pathway:` block of a certificate file.
std::vector<PathwayCertificate> parse_certificates(std::string_view text, const Catalog& catalog);
/// Parses a file holding exactly one pathway.
PathwayCertificate parse_certificate(std::string_view text, const Catalog& catalog);
std::vector<PathwayCertificate> load_certificates(const std::filesystem::path& path, const Catalog& catalog);

enum class CheckOutcome { Pass, Fail, Skipped };

struct StepCheck {
  std::size_t step = 0;  // 1-based
  std::string check;
  CheckOutcome outcome = CheckOutcome::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string pathway;
  char level = 'a';
  std::vector<StepCheck> checks;

  bool passed() const;
  std::vector<StepCheck> failures() const;
};

VerificationReport verify_level_a(const PathwayCertificate& c);
/// Applies every step's move, simplifies, identifies the result by
/// fingerprint and re-runs the level a checks. Steps without a site fail.
VerificationReport verify_level_b(const PathwayCertificate& c);

/// Step count of a verified certificate; throws ConsistencyError otherwise.
int upper_bound_from(const PathwayCertificate& c, const VerificationReport& report);

/// Node name with mirror prefixes dropped from every split-union term.
std::string strip_mirror(std::string_view name);

/// Directed graph of verified one-move edges; upper bounds are shortest
/// distances to a trivial link.
class PathwayGraph {
 public:
  void add(const PathwayCertificate& c);
  std::optional<int> distance_to_trivial(std::string_view name) const;
  /// Node sequence of a shortest route, starting at `name`.
  std::vector<std::string> route_to_trivial(std::string_view name) const;
  std::size_t num_edges() const;

 private:
  std::map<std::string, std::vector<std::string>> edges_;
};

}  // namespace deltalink
