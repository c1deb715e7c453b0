#include "doctest.h"

#include "core/bounds.hpp"
#include "core/errors.hpp"

#include <algorithm>

using namespace deltalink;

namespace {

const std::filesystem::path kData = DELTALINK_DATA_DIR;

const Catalog& bundled() {
  static const Catalog c = Catalog::load(kData / "catalog.txt");
  return c;
}

BoundInputs inputs(int u, int arf, IntInterval g4, std::vector<int> comps, std::optional<long long> mu) {
  return {"test", u, arf, g4, std::move(comps), mu};
}

}  // namespace

TEST_CASE("individual lower bounds") {
  CHECK(lower_half_unlinking(3) == 2);
  CHECK(lower_half_unlinking(1) == 1);
  CHECK(lower_half_unlinking(0) == 0);
  CHECK_THROWS_AS(lower_half_unlinking(-1), ValidationError);

  const std::vector<int> l9a2{1, 0};
  CHECK(lower_component_sum(l9a2, 1) == SourcedBound{2, BoundSource::ComponentSumMuBump});
  const std::vector<int> l9a4{2, 0};
  CHECK(lower_component_sum(l9a4, 2) == SourcedBound{3, BoundSource::ComponentSumMuBump});
  const std::vector<int> unknots{0, 0, 0};
  CHECK(lower_component_sum(unknots, std::nullopt) == SourcedBound{0, BoundSource::ComponentSum});
  CHECK(lower_component_sum(l9a4, 0) == SourcedBound{2, BoundSource::ComponentSum});

  CHECK(lower_four_genus(2) == 2);
  CHECK(lower_four_genus(parse_interval("1..2").lo) == 1);

  CHECK(parity_adjust(2, 1) == 3);
  CHECK(parity_adjust(3, 0) == 4);
  CHECK(parity_adjust(0, 0) == 0);
  CHECK_THROWS_AS(parity_adjust(0, 2), ValidationError);
}

TEST_CASE("combine") {
  SUBCASE("beta1 escalation") {
    auto r = combine(inputs(2, 1, {1, 1}, {0, 0}, 3), 3, true);
    CHECK(r.lb_final == 3);
    CHECK(r.status.kind == StatusKind::Exact);
    CHECK(r.status.to_string() == "3");
    CHECK(std::find(r.methods.begin(), r.methods.end(), "beta1_obstruction") != r.methods.end());
    auto without = combine(inputs(2, 1, {1, 1}, {0, 0}, 3), std::nullopt, false);
    CHECK(without.lb_final == 1);
    CHECK(without.status.to_string() == ">= 1");
  }
  SUBCASE("escalation needs odd parity") {
    CHECK(combine(inputs(2, 0, {1, 1}, {0, 0}, 0), std::nullopt, true).lb_final == 2);
  }
  SUBCASE("indeterminate") {
    auto r = combine(inputs(3, 0, {3, 3}, {3, 0}, 0), 6, false);
    CHECK(r.lb_final == 4);
    CHECK(r.status.kind == StatusKind::Interval);
    CHECK(r.status.values == std::vector<int>{4, 6});
    CHECK(r.status.to_string() == "4 or 6");
  }
  SUBCASE("trivial link") {
    auto r = combine(inputs(0, 0, {0, 0}, {0, 0}, 0), 0, false);
    CHECK(r.status.kind == StatusKind::Exact);
    CHECK(r.status.values == std::vector<int>{0});
    CHECK(r.methods.empty());
  }
  SUBCASE("inconsistent certificates") {
    CHECK_THROWS_AS(combine(inputs(3, 0, {3, 3}, {}, 0), 2, false), ConsistencyError);
    CHECK_THROWS_AS(combine(inputs(3, 0, {2, 2}, {}, 0), 5, false), ConsistencyError);
  }
  SUBCASE("monotone in every input") {
    for (int u = 0; u < 6; ++u) {
      for (int g = 0; g < 4; ++g) {
        for (int c = 0; c < 4; ++c) {
          for (int arf = 0; arf < 2; ++arf) {
            int base = combine(inputs(u, arf, {g, g}, {c}, 0), std::nullopt, false).lb_final;
            CHECK(base % 2 == arf);
            CHECK(combine(inputs(u + 1, arf, {g, g}, {c}, 0), std::nullopt, false).lb_final >= base);
            CHECK(combine(inputs(u, arf, {g + 1, g + 1}, {c}, 0), std::nullopt, false).lb_final >= base);
            CHECK(combine(inputs(u, arf, {g, g}, {c + 1}, 0), std::nullopt, false).lb_final >= base);
            CHECK(combine(inputs(u, arf, {g, g}, {c}, 1), std::nullopt, false).lb_final >= base);
          }
        }
      }
    }
  }
}

TEST_CASE("catalog lower bounds agree with the expected values and methods") {
  const auto& cat = bundled();
  for (const auto& rec : cat.links()) {
    CAPTURE(rec.name_t);
    auto in = bound_inputs(cat, rec);
    auto r = combine(in, std::nullopt, rec.toroidal_obstruction);
    CHECK(r.lb_final == rec.udelta_expected.front());
    CHECK(lower_bound_from_methods(in, rec.methods_expected, rec.toroidal_obstruction) == r.lb_final);
    auto exact = combine(in, rec.udelta_expected.back(), rec.toroidal_obstruction);
    CHECK(exact.status.values == rec.udelta_expected);
  }
}

TEST_CASE("catalog inputs") {
  const auto& cat = bundled();
  auto l9a2 = bound_inputs(cat, *cat.find_link("L9a2"));
  CHECK(l9a2.u == 3);
  CHECK(l9a2.component_udeltas == std::vector<int>{1, 0});
  REQUIRE(l9a2.mu1122);
  CHECK(*l9a2.mu1122 != 0);
  auto l9a40 = bound_inputs(cat, *cat.find_link("L9a40"));
  CHECK(combine(l9a40, std::nullopt, false).lb_final == 3);
  CHECK_FALSE(bound_inputs(cat, *cat.find_link("L6a4")).mu1122);
}

TEST_CASE("Delta-Gordian distance bounds") {
  const auto& cat = bundled();
  const auto& l9a40 = *cat.find_link("L9a40");
  const auto& l5a1 = *cat.find_link("L5a1");
  const auto& l7a4 = *cat.find_link("L7a4");

  auto self = delta_distance_bounds(distance_inputs(l9a40, 3), distance_inputs(l9a40, 3));
  CHECK(self.lower == 0);
  CHECK(self.parity == 0);

  auto to_trivial = delta_distance_bounds(distance_inputs(l9a40, 3), trivial_distance_inputs(2));
  CHECK(to_trivial.lower == 3);
  CHECK(to_trivial.upper == 3);
  CHECK(to_trivial.parity == 1);

  auto adjacent = delta_distance_bounds(distance_inputs(l5a1, 1), distance_inputs(l7a4, 2));
  CHECK(adjacent.parity == 1);
  CHECK(adjacent.lower >= 1);
  CHECK(adjacent.upper == 3);

  auto unknown = delta_distance_bounds(distance_inputs(l5a1, std::nullopt), distance_inputs(l7a4, std::nullopt));
  CHECK(unknown.lower == 1);
  CHECK_FALSE(unknown.upper);

  DistanceInputs hopf{"hopf", LinkingMatrix(2), 1, {0, 0}, std::nullopt};
  hopf.lk.at(0, 1) = 1;
  hopf.lk.at(1, 0) = 1;
  CHECK_THROWS_AS(delta_distance_bounds(hopf, trivial_distance_inputs(2)), ValidationError);
  CHECK_THROWS_AS(delta_distance_bounds(distance_inputs(l5a1, 1), trivial_distance_inputs(3)), ValidationError);
}
