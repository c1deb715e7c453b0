#pragma once

// Knots in the solid torus, drawn as annular diagrams: an ordinary PD code for
// the knot plus the signed crossings of its arcs with a fixed ray from the
// puncture.

#include "core/diagram.hpp"

#include <filesystem>
#include <map>
#include <string_view>
#include <vector>

namespace deltalink {

struct Cut {
  int arc = 0;
  int direction = 0;  // +1 or -1
};

class AnnularDiagram {
 public:
  /// Throws ValidationError for several components, unknown arcs or nonzero winding.
  AnnularDiagram(LinkDiagram base, std::vector<Cut> cuts);

  const LinkDiagram& base() const { return base_; }
  const std::vector<Cut>& cuts() const { return cuts_; }
  /// Net cut count from the first arc of the knot up to the start of `arc`.
  int level(int arc) const { return levels_.at(arc); }

 private:
  LinkDiagram base_;
  std::vector<Cut> cuts_;
  std::map<int, int> levels_;
};

/// Text form: one PD line followed by `cut(arc,dir)` lines; `#` starts a comment line.
AnnularDiagram parse_annular(std::string_view text);
AnnularDiagram load_annular(const std::filesystem::path& path);

/// Linking number of adjacent lifts in the infinite cyclic cover.
int beta1(const AnnularDiagram& a);

/// Mirrors the knot; the cut data is unchanged.
AnnularDiagram mirror(const AnnularDiagram& a);
/// Reverses the direction of every cut.
AnnularDiagram flip_levels(const AnnularDiagram& a);

/// A toroidal Delta move changes beta1 by at most 2.
bool obstructs_single_toroidal_delta(int b);

}  // namespace deltalink
