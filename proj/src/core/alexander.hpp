#pragma once

// Alexander polynomials from the Wirtinger presentation by Fox calculus, and
// the invariants derived from them.

#include "core/diagram.hpp"
#include "core/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltalink {

struct AlexanderMatrix {
  std::size_t nvars = 1;                         // one variable per component
  std::vector<std::vector<LaurentPoly>> rows;    // one row per crossing
  std::vector<int> component_of;                 // generator -> component
};

/// n x n Fox matrix of a diagram with n crossings. Requires a connected
/// projection in which every component passes under somewhere.
AlexanderMatrix alexander_matrix(const LinkDiagram& d);

/// Fraction-free (Bareiss) determinant over the Laurent ring.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m, std::size_t nvars);

/// Normalized polynomial from the minor that deletes `row` and generator `col`;
/// for links the minor is divided by (t_c - 1), c the component of `col`.
LaurentPoly alexander_from_minor(const LinkDiagram& d, std::size_t row, std::size_t col);

/// Normalized Alexander polynomial in one variable per component, cross-checked
/// on two minors. Split diagrams (free loops, disconnected projection, or a
/// component never passing under) give 0 when there are two or more components.
LaurentPoly alexander_polynomial(const LinkDiagram& d);
LaurentPoly alexander_poly_knot(const LinkDiagram& d);
LaurentPoly alexander_poly_link2(const LinkDiagram& d);

/// 0 or 1 from |Delta(-1)| mod 8.
int arf_knot(const LinkDiagram& d);
/// |f(1,1)| where Delta_L = (x-1)(y-1) f.
long long milnor_1122(const LinkDiagram& d);

/// Representative of p under variable permutations, t_i <-> 1/t_i and units.
LaurentPoly symmetric_canonical(const LaurentPoly& p);

struct Fingerprint {
  std::size_t m = 0;
  std::vector<int> lk;                         // sorted |lk(i,j)|, i < j
  LaurentPoly delta;                           // symmetric_canonical
  std::vector<LaurentPoly> component_deltas;   // sorted, symmetric_canonical
  std::vector<LaurentPoly> pair_deltas;        // 2-component sublinks, only when m >= 3
  std::optional<int> arf;

  /// Equality of all fields, comparing arf only when both sides carry one.
  bool matches(const Fingerprint& o) const;
  std::string to_string() const;
};

/// `link_arf` supplies the Arf invariant of a proper link with several
/// components; for knots it is computed.
Fingerprint fingerprint(const LinkDiagram& d, std::optional<int> link_arf = std::nullopt);

}  // namespace deltalink
