#pragma once

// Oriented link diagrams in planar-diagram (PD) notation.
//
// A crossing X(a,b,c,d) lists its four arc labels counterclockwise starting at
// the incoming under-strand, so the under-strand runs a -> c. The over-strand
// runs d -> b on a positive crossing and b -> d on a negative one. Each arc
// label occurs exactly twice in a diagram. Crossingless unknotted components
// cannot be expressed in PD and are carried as a separate free-loop count.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;  // +1 or -1

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }

  bool operator==(const Crossing&) const = default;
};

class LinkDiagram {
 public:
  /// Validates orientation consistency; every crossing must carry a sign.
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  static LinkDiagram trivial(int components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t num_crossings() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }

  /// Components carrying crossings come first (in label order), then free loops.
  std::size_t num_components() const { return components_.size() + static_cast<std::size_t>(free_loops_); }
  /// Arc labels of crossing-carrying component i in orientation order.
  const std::vector<int>& component_arcs(std::size_t i) const { return components_.at(i); }
  std::size_t num_crossing_components() const { return components_.size(); }

  int component_of_arc(int label) const;
  /// The arc following `label` along its component.
  int next_arc(int label) const;
  int under_component(std::size_t crossing) const { return component_of_arc(crossings_.at(crossing).under_in()); }
  int over_component(std::size_t crossing) const { return component_of_arc(crossings_.at(crossing).over_in()); }

  /// PD text; signs are written only where label succession cannot determine them.
  std::string to_pd() const;

  bool operator==(const LinkDiagram& o) const { return crossings_ == o.crossings_ && free_loops_ == o.free_loops_; }

 private:
  struct ArcInfo {
    int component = -1;
    int next = -1;
  };

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::vector<int>> components_;
  std::map<int, ArcInfo> arcs_;
};

/// Parses `pd := [O*n [,]] item ("," item)*`, `item := "X" [+|-] "(" int "," int "," int "," int ")"`.
/// Labels must increase along each component (with wraparound). `extra_free_loops`
/// adds crossingless components. Throws ParseError or ValidationError.
LinkDiagram parse_pd(std::string_view text, int extra_free_loops = 0);

class LinkingMatrix {
 public:
  explicit LinkingMatrix(std::size_t m) : m_(m), entries_(m * m, 0) {}
  std::size_t size() const { return m_; }
  int at(std::size_t i, std::size_t j) const { return entries_.at(i * m_ + j); }
  int& at(std::size_t i, std::size_t j) { return entries_.at(i * m_ + j); }
  bool operator==(const LinkingMatrix&) const = default;
  LinkingMatrix operator-() const;
  std::string to_string() const;

 private:
  std::size_t m_;
  std::vector<int> entries_;
};

LinkingMatrix linking_matrix(const LinkDiagram& d);
bool is_algebraically_split(const LinkDiagram& d);
/// Total pairwise linking number is even.
bool is_proper(const LinkDiagram& d);
/// Equal after some reordering of the components.
bool equivalent_up_to_order(const LinkingMatrix& a, const LinkingMatrix& b);

/// Deletes every component not listed in `keep` (0-based component indices).
LinkDiagram extract_sublink(const LinkDiagram& d, std::span<const int> keep);
LinkDiagram mirror(const LinkDiagram& d);
/// Greedy Reidemeister I / II reduction, relabelled canonically.
LinkDiagram simplify(const LinkDiagram& d);
/// Relabels arcs 1..2n along the components; crossing order is preserved.
LinkDiagram canonical(const LinkDiagram& d);
/// Split union; components of `a` come first.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// A triangular face whose three crossings are cyclically over/under
/// (each strand passes over one neighbour and under the other).
struct DeltaSite {
  std::array<int, 3> crossings{};      // 0-based, in face-walk order
  std::array<int, 3> triangle_arcs{};  // arc joining crossings[i] and crossings[(i+1)%3]

  bool operator==(const DeltaSite&) const = default;
};

/// Resolves a site from crossing indices listed in face-walk order (any rotation).
/// Throws SiteError when no cyclic triangular face has these crossings in this order.
DeltaSite find_delta_site(const LinkDiagram& d, std::array<int, 3> crossings);
std::vector<DeltaSite> delta_sites(const LinkDiagram& d);

/// Replaces the site's triangle by the opposite template: each strand meets
/// its two site crossings in reversed order, keeping every crossing's over
/// strand and sign. Crossing indices are preserved, so the image site has
/// the same crossing ids. Throws SiteError for a stale site.
LinkDiagram apply_delta_move(const LinkDiagram& d, const DeltaSite& site);

/// Faces of the projection as cyclic lists of arc labels (tests and diagnostics).
std::vector<std::vector<int>> faces(const LinkDiagram& d);
/// Number of connected pieces of the projection that carry crossings.
int projection_pieces(const LinkDiagram& d);

}  // namespace deltalink
