#include "doctest.h"

#include "core/alexander.hpp"
#include "core/errors.hpp"

#include <array>

using namespace deltalink;

namespace {

const char* kTrefoil = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)";
const char* kFigureEight = "X+(3,1,4,8),X-(1,6,2,7),X-(5,2,6,3),X+(7,5,8,4)";
const char* kFiveOne = "X+(5,1,6,10),X+(1,7,2,6),X+(7,3,8,2),X+(3,9,4,8),X+(9,5,10,4)";
const char* kFiveTwo = "X+(3,1,4,10),X+(1,7,2,6),X+(7,3,8,2),X+(9,5,10,4),X+(5,9,6,8)";
const char* kL9a2 =
    "X+(5,1,6,4),X-(1,12,2,13),X-(7,2,8,3),X+(3,15,4,14),X-(11,18,12,5),X+(13,7,14,6),"
    "X-(15,8,16,9),X-(9,16,10,17),X-(17,10,18,11)";
const char* kWhitehead = "X(5,1,6,4),X(1,5,2,10),X(7,2,8,3),X(3,8,4,9),X(9,6,10,7)";

LaurentPoly P1(const char* s) { return LaurentPoly::parse(s, 1); }
LaurentPoly P2(const char* s) { return LaurentPoly::parse(s, 2); }

// det(V - t V^T) for a 2x2 Seifert matrix.
LaurentPoly seifert_oracle(std::array<std::array<int, 2>, 2> v) {
  auto t = LaurentPoly::variable(1, 0);
  auto entry = [&](int i, int j) { return LaurentPoly::constant(1, v[i][j]) - t * LaurentPoly::constant(1, v[j][i]); };
  return normalize(entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0));
}

LaurentPoly inverted(const LaurentPoly& p) {
  return p.map_exponents(p.nvars(), [](const LaurentPoly::Exponents& e) {
    auto r = e;
    for (auto& x : r) x = -x;
    return r;
  });
}

}  // namespace

TEST_CASE("Fox matrix structure") {
  auto a = alexander_matrix(parse_pd(kTrefoil));
  REQUIRE(a.rows.size() == 3);
  std::array<long long, 1> at_one{1};
  for (const auto& row : a.rows) {
    int nonzero = 0;
    BigInt sum = 0;
    for (const auto& e : row) {
      nonzero += !e.is_zero();
      sum += e.evaluate(at_one);
    }
    CHECK(nonzero == 3);
    CHECK(sum == 0);
  }
}

TEST_CASE("knot polynomials agree with Seifert-matrix oracles") {
  CHECK(alexander_poly_knot(parse_pd("", 1)) == LaurentPoly::constant(1, 1));
  CHECK(alexander_poly_knot(parse_pd("X-(1,2,2,1)")) == LaurentPoly::constant(1, 1));
  auto trefoil = seifert_oracle({{{-1, 1}, {0, -1}}});
  CHECK(trefoil == P1("t^2 - t + 1"));
  CHECK(alexander_poly_knot(parse_pd(kTrefoil)) == trefoil);
  CHECK(alexander_poly_knot(mirror(parse_pd(kTrefoil))) == trefoil);
  auto figure_eight = seifert_oracle({{{1, 1}, {0, -1}}});
  CHECK(figure_eight == P1("t^2 - 3*t + 1"));
  CHECK(alexander_poly_knot(parse_pd(kFigureEight)) == figure_eight);
  CHECK(alexander_poly_knot(parse_pd(kFiveTwo)) == seifert_oracle({{{-1, 1}, {0, -2}}}));
  // (5,2) torus knot: (t^10 - 1)(t - 1) / ((t^2 - 1)(t^5 - 1)).
  auto torus = exact_divide(P1("t^10 - 1") * P1("t - 1"), P1("t^2 - 1") * P1("t^5 - 1"));
  CHECK(alexander_poly_knot(parse_pd(kFiveOne)) == normalize(torus));
}

TEST_CASE("Arf invariant of knots") {
  CHECK(arf_knot(parse_pd("", 1)) == 0);
  CHECK(arf_knot(parse_pd(kTrefoil)) == 1);
  CHECK(arf_knot(parse_pd(kFigureEight)) == 1);
  CHECK(arf_knot(parse_pd(kFiveOne)) == 1);
  CHECK(arf_knot(parse_pd(kFiveTwo)) == 0);
}

TEST_CASE("L9a2 has the displayed two-variable polynomial") {
  auto d = parse_pd(kL9a2);
  auto expected = P2("x - 1") * P2("y - 1") * P2("y^4 - y^3 + y^2 - y + 1");
  auto delta = alexander_poly_link2(d);
  CHECK(symmetric_canonical(delta) == symmetric_canonical(expected));
  CHECK(milnor_1122(d) == 1);
  CHECK(equal_up_to_unit(alexander_poly_link2(mirror(d)), inverted(delta)));
}

TEST_CASE("every minor gives the same polynomial") {
  for (const char* pd : {kL9a2, kWhitehead, kFigureEight}) {
    auto d = parse_pd(pd);
    auto reference = alexander_polynomial(d);
    for (std::size_t i = 0; i < d.num_crossings(); ++i) {
      CHECK(alexander_from_minor(d, i, 0) == reference);
      CHECK(alexander_from_minor(d, 0, i) == reference);
    }
  }
}

TEST_CASE("split diagrams have vanishing polynomial") {
  auto two_loops = parse_pd("", 2);
  CHECK(alexander_polynomial(two_loops).is_zero());
  CHECK(milnor_1122(two_loops) == 0);
  auto u = disjoint_union(parse_pd(kTrefoil), parse_pd(kFigureEight));
  CHECK(alexander_poly_link2(u).is_zero());
  CHECK(alexander_poly_link2(parse_pd(kTrefoil, 1)).is_zero());
}

TEST_CASE("Whitehead link") {
  auto w = parse_pd(kWhitehead);
  CHECK(milnor_1122(w) == 1);
  CHECK_THROWS_AS(milnor_1122(parse_pd("X-(3,2,4,1),X-(1,4,2,3)")), ValidationError);
}

TEST_CASE("fingerprints") {
  auto d = parse_pd(kL9a2);
  auto f = fingerprint(d);
  CHECK(f.m == 2);
  CHECK(f.lk == std::vector<int>{0});
  REQUIRE(f.component_deltas.size() == 2);
  CHECK(f.component_deltas[0] == LaurentPoly::constant(1, 1));
  CHECK(f.component_deltas[1] == P1("t^2 - t + 1"));
  CHECK(fingerprint(mirror(d)).matches(f));
  CHECK(fingerprint(simplify(d)).matches(f));
  CHECK_FALSE(fingerprint(parse_pd(kWhitehead)).matches(fingerprint(parse_pd("", 2))));
  auto knot = fingerprint(parse_pd(kTrefoil));
  CHECK(knot.arf == 1);
  CHECK_FALSE(knot.matches(fingerprint(parse_pd(kFigureEight))));
  auto with_arf = fingerprint(d, 1);
  CHECK(with_arf.matches(f));
  CHECK_FALSE(with_arf.matches(fingerprint(d, 0)));
}
