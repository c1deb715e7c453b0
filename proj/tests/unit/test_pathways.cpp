#include "doctest.h"

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/pathways.hpp"

#include <algorithm>

using namespace deltalink;

namespace {

const std::filesystem::path kData = DELTALINK_DATA_DIR;
const char* kTrefoil = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)";

const Catalog& bundled() {
  static const Catalog c = Catalog::load(kData / "catalog.txt");
  return c;
}

PathwayCertificate load_one(const char* file) {
  auto all = load_certificates(kData / "pathways" / file, bundled());
  REQUIRE(all.size() == 1);
  return all.front();
}

std::string site_text(const std::array<int, 3>& s) {
  return "(" + std::to_string(s[0] + 1) + "," + std::to_string(s[1] + 1) + "," + std::to_string(s[2] + 1) + ")";
}

bool failed(const VerificationReport& r, const std::string& check) {
  auto f = r.failures();
  return std::any_of(f.begin(), f.end(), [&](const auto& c) { return c.check == check; });
}

}  // namespace

TEST_CASE("node resolution") {
  const auto& cat = bundled();
  auto trivial = resolve_node("0_1^2", cat);
  CHECK(trivial.trivial);
  CHECK(trivial.diagram.num_components() == 2);
  CHECK(trivial.arf == 0);

  auto split = resolve_node("3_1#0_1", cat);
  CHECK_FALSE(split.trivial);
  CHECK(split.diagram.num_components() == 2);
  CHECK(split.fingerprint.delta.is_zero());
  CHECK(split.arf == 1);
  CHECK_FALSE(split.g4);

  auto mirrored = resolve_node("mL7a4", cat);
  CHECK(mirrored.diagram == mirror(cat.find_link("L7a4")->diagram));
  CHECK(mirrored.fingerprint.matches(resolve_node("L7a4", cat).fingerprint));
  CHECK(resolve_node("5^2_1", cat).fingerprint.matches(resolve_node("L5a1", cat).fingerprint));

  CHECK_THROWS_AS(resolve_node("NoSuchLink", cat), LookupError);
  CHECK_THROWS_AS(resolve_node("3_1#", cat), ParseError);
  CHECK(strip_mirror("mL7a4") == "L7a4");
  CHECK(strip_mirror("m3_1 # 0_1") == "3_1#0_1");
}

TEST_CASE("certificate grammar") {
  const auto& cat = bundled();
  auto c = parse_certificate("pathway: L9a2 -> 3_1#0_1 -> 0_1^2\n", cat);
  CHECK(c.num_steps() == 2);
  CHECK_FALSE(c.has_all_steps());
  CHECK(c.description() == "L9a2 -> 3_1#0_1 -> 0_1^2");

  auto zero = parse_certificate("# nothing to do\npathway: 0_1^2\n", cat);
  CHECK(zero.num_steps() == 0);
  CHECK(upper_bound_from(zero, verify_level_a(zero)) == 0);

  CHECK_THROWS_AS(parse_certificate("pathway: L9a2 -> NoSuchLink\n", cat), LookupError);
  CHECK_THROWS_AS(parse_certificate("pathway: L5a1 -> 0_1^2\nstep 1: pd = O*2 ; site = (1,2)\n", cat), ParseError);
  CHECK_THROWS_AS(parse_certificate("pathway: 3_1 -> 0_1\nstep 1: pd = X(1,5,2,4),X(3,1,4,6),X(5,3,6,2) ; site = (1,2,4)\n", cat),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate("pathway: 3_1 -> 0_1\nstep 2: pd = O*1 ; site = (1,2,3)\n", cat), ParseError);
  CHECK_THROWS_AS(parse_certificate("step 1: pd = O*1 ; site = (1,2,3)\n", cat), ParseError);
  CHECK_THROWS_AS(parse_certificate("pathway: 0_1\npathway: 0_1\n", cat), ParseError);
}

TEST_CASE("level a") {
  const auto& cat = bundled();
  SUBCASE("L9a40 chain") {
    auto c = load_one("L9a40.path");
    auto r = verify_level_a(c);
    CHECK(r.passed());
    CHECK(upper_bound_from(c, r) == 3);
  }
  SUBCASE("Hopf to Hopf skips the arf check") {
    auto hopf = make_node("hopf", parse_pd("X-(3,2,4,1),X-(1,4,2,3)"));
    PathwayCertificate c{{hopf, hopf}, {std::nullopt}};
    auto r = verify_level_a(c);
    CHECK(r.passed());
    auto arf = std::find_if(r.checks.begin(), r.checks.end(), [](const auto& x) { return x.check == "arf"; });
    REQUIRE(arf != r.checks.end());
    CHECK(arf->outcome == CheckOutcome::Skipped);
  }
  SUBCASE("unknot to Hopf fails the linking check") {
    PathwayCertificate c{{resolve_node("0_1^2", cat), make_node("hopf", parse_pd("X-(3,2,4,1),X-(1,4,2,3)"))},
                         {std::nullopt}};
    auto r = verify_level_a(c);
    CHECK(failed(r, "linking"));
    CHECK_THROWS_AS(upper_bound_from(c, r), ConsistencyError);
  }
  SUBCASE("arf must flip") {
    auto c = parse_certificate("pathway: L7a4 -> 0_1^2\n", cat);
    CHECK(failed(verify_level_a(c), "arf"));
  }
  SUBCASE("component count") {
    auto c = parse_certificate("pathway: L6a4 -> 0_1^2\n", cat);
    CHECK(failed(verify_level_a(c), "components"));
  }
  SUBCASE("every bundled edge") {
    std::size_t edges = 0;
    for (const auto& file : cat.pathway_files()) {
      for (const auto& c : load_certificates(file, cat)) {
        CAPTURE(c.description());
        CHECK(verify_level_a(c).passed());
        edges += c.num_steps();
      }
    }
    CHECK(edges >= 39);
  }
}

TEST_CASE("level b") {
  const auto& cat = bundled();
  SUBCASE("prose pathways") {
    for (const char* file : {"L9a2.path", "L9a18.path", "L9a40.path"}) {
      CAPTURE(file);
      auto c = load_one(file);
      REQUIRE(c.has_all_steps());
      auto r = verify_level_b(c);
      for (const auto& f : r.failures()) MESSAGE(f.step << " " << f.check << ": " << f.detail);
      CHECK(r.passed());
      CHECK(r.level == 'b');
    }
    CHECK(upper_bound_from(load_one("L9a2.path"), verify_level_b(load_one("L9a2.path"))) == 2);
  }
  SUBCASE("the L9a2 move lands on the split union of a trefoil and an unknot") {
    auto c = load_one("L9a2.path");
    const auto& step = *c.steps[0];
    auto result = simplify(apply_delta_move(step.diagram, find_delta_site(step.diagram, step.site)));
    auto fp = fingerprint(result);
    CHECK(fp.m == 2);
    CHECK(fp.delta.is_zero());
    auto trefoil = fingerprint(parse_pd(kTrefoil));
    std::vector<LaurentPoly> expected{LaurentPoly::constant(1, 1), trefoil.delta};
    std::sort(expected.begin(), expected.end());
    CHECK(fp.component_deltas == expected);
  }
  SUBCASE("a move on an unknot diagram produces a trefoil") {
    auto t = parse_pd(kTrefoil);
    auto site = delta_sites(t).front();
    auto unknot = apply_delta_move(t, site);
    std::string text = "pathway: 0_1 -> 3_1\nstep 1: pd = " + unknot.to_pd() + " ; site = " + site_text(site.crossings) + "\n";
    auto r = verify_level_b(parse_certificate(text, cat));
    CHECK(r.passed());
  }
  SUBCASE("tampered site is refuted") {
    auto c = load_one("L9a2.path");
    auto& step = *c.steps[0];
    step.site[1] = (step.site[1] + 3) % static_cast<int>(step.diagram.num_crossings());
    auto r = verify_level_b(c);
    CHECK_FALSE(r.passed());
    CHECK(failed(r, "site"));
  }
  SUBCASE("wrong target is refuted") {
    auto c = load_one("L9a2.path");
    c.nodes[1] = resolve_node("4_1#0_1", cat);
    CHECK(failed(verify_level_b(c), "target"));
  }
  SUBCASE("missing steps fail") {
    auto c = parse_certificate("pathway: L9a14 -> L9n5\n", cat);
    CHECK(failed(verify_level_b(c), "site"));
  }
  SUBCASE("every step in the bundled tree") {
    for (const auto& c : load_certificates(kData / "pathways" / "tree.path", cat)) {
      CAPTURE(c.description());
      CHECK(verify_level_b(c).passed());
    }
  }
}

TEST_CASE("upper bounds from the pathway graph") {
  const auto& cat = bundled();
  PathwayGraph g;
  for (const auto& file : cat.pathway_files()) {
    for (const auto& c : load_certificates(file, cat)) {
      if (verify_level_a(c).passed()) g.add(c);
    }
  }
  CHECK(g.distance_to_trivial("L9a2") == 2);
  CHECK(g.distance_to_trivial("L9a40") == 3);
  CHECK(g.distance_to_trivial("mL7a4") == 2);
  CHECK(g.distance_to_trivial("0_1^3") == 0);
  CHECK_FALSE(g.distance_to_trivial("NoSuchLink"));
  CHECK(g.route_to_trivial("L9a18") == std::vector<std::string>{"L9a18", "L7a4", "L5a1", "0_1^2"});

  for (const auto& rec : cat.links()) {
    CAPTURE(rec.name_t);
    auto ub = g.distance_to_trivial(rec.name_t);
    REQUIRE(ub);
    CHECK(*ub == rec.udelta_expected.back());
    CHECK(*ub >= combine(bound_inputs(cat, rec), std::nullopt, rec.toroidal_obstruction).lb_final);
  }
}
