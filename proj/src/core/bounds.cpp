#include "core/bounds.hpp"

#include "core/alexander.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <numeric>

namespace deltalink {

std::string_view source_tag(BoundSource s) {
  switch (s) {
    case BoundSource::HalfUnlinking: return "half_unlinking";
    case BoundSource::ComponentSum: return "component_sum";
    case BoundSource::ComponentSumMuBump: return "component_sum_mu_bump";
    case BoundSource::FourGenus: return "four_genus";
    case BoundSource::Beta1Obstruction: return "beta1_obstruction";
  }
  return "";
}

int lower_half_unlinking(int u) {
  if (u < 0) throw ValidationError("unlinking number must be nonnegative");
  return (u + 1) / 2;
}

SourcedBound lower_component_sum(std::span<const int> udelta_components, std::optional<long long> mu1122) {
  int sum = std::accumulate(udelta_components.begin(), udelta_components.end(), 0);
  if (mu1122 && *mu1122 != 0) return {sum + 1, BoundSource::ComponentSumMuBump};
  return {sum, BoundSource::ComponentSum};
}

int lower_four_genus(int g4_lo) {
  if (g4_lo < 0) throw ValidationError("4-genus must be nonnegative");
  return g4_lo;
}

int parity_adjust(int lb, int arf) {
  if (arf != 0 && arf != 1) throw ValidationError("arf must be 0 or 1");
  return lb % 2 == arf ? lb : lb + 1;
}

BoundInputs bound_inputs(const Catalog& catalog, const LinkRecord& record) {
  BoundInputs in{record.name_t, record.u, record.arf, record.g4, {}, std::nullopt};
  for (const auto& k : record.components) in.component_udeltas.push_back(catalog.knot(k).udelta);
  if (record.diagram.num_components() == 2) in.mu1122 = milnor_1122(record.diagram);
  return in;
}

std::string BoundStatus::to_string() const {
  switch (kind) {
    case StatusKind::Exact: return std::to_string(values.at(0));
    case StatusKind::Interval: return format_alternatives(values, " or ");
    case StatusKind::LowerOnly: return ">= " + std::to_string(values.at(0));
  }
  return "";
}

namespace {

std::vector<SourcedBound> all_sources(const BoundInputs& in) {
  return {{lower_half_unlinking(in.u), BoundSource::HalfUnlinking},
          lower_component_sum(in.component_udeltas, in.mu1122),
          {lower_four_genus(in.g4.lo), BoundSource::FourGenus}};
}

int escalate(int lb, int parity, bool beta1_flag) {
  // beta1 rules out 1, parity rules out 2.
  return beta1_flag && lb == 1 && parity == 1 ? 3 : lb;
}

}  // namespace

BoundReport combine(const BoundInputs& in, std::optional<int> ub, bool beta1_flag, std::string certificate) {
  BoundReport r;
  r.link = in.link;
  r.parity = in.arf;
  r.lower_bounds = all_sources(in);
  r.ub = ub;
  r.certificate = std::move(certificate);

  int best = 0;
  for (const auto& b : r.lower_bounds) best = std::max(best, b.value);
  for (const auto& b : r.lower_bounds) {
    if (b.value == best && best > 0) r.methods.emplace_back(source_tag(b.source));
  }
  int lb = parity_adjust(best, r.parity);
  if (lb != best) r.methods.emplace_back("arf_parity");
  int escalated = escalate(lb, r.parity, beta1_flag);
  if (escalated != lb) {
    r.lower_bounds.push_back({escalated, BoundSource::Beta1Obstruction});
    r.methods.emplace_back(source_tag(BoundSource::Beta1Obstruction));
  }
  r.lb_final = escalated;

  if (ub) {
    if (*ub < r.lb_final) {
      throw ConsistencyError(in.link + ": upper bound " + std::to_string(*ub) + " is below the lower bound " +
                             std::to_string(r.lb_final));
    }
    if (*ub % 2 != r.parity) {
      throw ConsistencyError(in.link + ": upper bound " + std::to_string(*ub) + " contradicts arf parity");
    }
    r.status.kind = *ub == r.lb_final ? StatusKind::Exact : StatusKind::Interval;
    for (int v = r.lb_final; v <= *ub; v += 2) r.status.values.push_back(v);
  } else {
    r.status = {StatusKind::LowerOnly, {r.lb_final}};
  }
  return r;
}

int lower_bound_from_methods(const BoundInputs& in, std::span<const std::string> methods, bool beta1_flag) {
  auto listed = [&](std::string_view tag) { return std::find(methods.begin(), methods.end(), tag) != methods.end(); };
  int best = 0;
  if (listed("half_unlinking")) best = std::max(best, lower_half_unlinking(in.u));
  if (listed("four_genus")) best = std::max(best, lower_four_genus(in.g4.lo));
  if (listed("component_sum")) best = std::max(best, lower_component_sum(in.component_udeltas, std::nullopt).value);
  if (listed("component_sum_mu_bump")) best = std::max(best, lower_component_sum(in.component_udeltas, in.mu1122).value);
  if (listed("arf_parity")) best = parity_adjust(best, in.arf);
  return escalate(best, in.arf, beta1_flag && listed("beta1_obstruction"));
}

DistanceInputs distance_inputs(const LinkRecord& record, std::optional<int> udelta) {
  return {record.name_t, linking_matrix(record.diagram), record.arf, record.g4, udelta};
}

DistanceInputs trivial_distance_inputs(std::size_t components) {
  return {"0_1^" + std::to_string(components), LinkingMatrix(components), 0, {0, 0}, 0};
}

DistanceBounds delta_distance_bounds(const DistanceInputs& a, const DistanceInputs& b) {
  if (!equivalent_up_to_order(a.lk, b.lk)) {
    throw ValidationError(a.link + " and " + b.link + " have different linking numbers and are not Delta-equivalent");
  }
  if (a.link == b.link) return {0, 0, 0};
  DistanceBounds d;
  d.parity = (a.arf + b.arf) % 2;
  int lower = std::max({0, a.g4.lo - b.g4.hi, b.g4.lo - a.g4.hi});
  if (a.udelta && b.udelta) {
    lower = std::max(lower, std::abs(*a.udelta - *b.udelta));
    d.upper = *a.udelta + *b.udelta;
  }
  d.lower = parity_adjust(lower, d.parity);
  return d;
}

}  // namespace deltalink
