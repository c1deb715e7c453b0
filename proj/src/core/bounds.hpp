#pragma once

// Lower bounds, parity and upper bounds for the Delta-unlinking number, and
// bounds for the Delta-Gordian distance between two links.

#include "core/catalog.hpp"
#include "core/diagram.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

enum class BoundSource { HalfUnlinking, ComponentSum, ComponentSumMuBump, FourGenus, Beta1Obstruction };

std::string_view source_tag(BoundSource s);

struct SourcedBound {
  int value = 0;
  BoundSource source = BoundSource::HalfUnlinking;
  bool operator==(const SourcedBound&) const = default;
};

/// ceil(u / 2).
int lower_half_unlinking(int u);
/// Sum of the component Delta-unknotting numbers, plus one when a nonzero
/// mu(1122) is supplied.
SourcedBound lower_component_sum(std::span<const int> udelta_components, std::optional<long long> mu1122);
int lower_four_genus(int g4_lo);
/// Smallest value >= lb with the parity of arf.
int parity_adjust(int lb, int arf);

struct BoundInputs {
  std::string link;
  int u = 0;
  int arf = 0;
  IntInterval g4;
  std::vector<int> component_udeltas;
  std::optional<long long> mu1122;  // two-component links only
};

/// Gathers the inputs of a catalog record; mu(1122) is computed from the diagram.
BoundInputs bound_inputs(const Catalog& catalog, const LinkRecord& record);

enum class StatusKind { Exact, Interval, LowerOnly };

struct BoundStatus {
  StatusKind kind = StatusKind::LowerOnly;
  std::vector<int> values;  // Exact: {n}; Interval: lb, lb+2, ..., ub; LowerOnly: {lb}
  /// "3", "4 or 6", ">= 2".
  std::string to_string() const;
};

struct BoundReport {
  std::string link;
  std::vector<SourcedBound> lower_bounds;
  int parity = 0;
  int lb_final = 0;
  std::optional<int> ub;
  std::string certificate;
  BoundStatus status;
  std::vector<std::string> methods;  // tags that produced lb_final
};

/// Throws ConsistencyError when ub < lb_final or ub has the wrong parity.
BoundReport combine(const BoundInputs& in, std::optional<int> ub, bool beta1_flag, std::string certificate = {});

/// The lower bound obtainable from the listed method tags alone.
int lower_bound_from_methods(const BoundInputs& in, std::span<const std::string> methods, bool beta1_flag);

struct DistanceInputs {
  std::string link;
  LinkingMatrix lk{0};
  int arf = 0;
  IntInterval g4;
  std::optional<int> udelta;  // when known exactly
};

struct DistanceBounds {
  int lower = 0;
  std::optional<int> upper;
  int parity = 0;
};

DistanceInputs distance_inputs(const LinkRecord& record, std::optional<int> udelta);
DistanceInputs trivial_distance_inputs(std::size_t components);

/// Throws ValidationError when the linking matrices differ (the links are not
/// Delta-equivalent).
DistanceBounds delta_distance_bounds(const DistanceInputs& a, const DistanceInputs& b);

}  // namespace deltalink
