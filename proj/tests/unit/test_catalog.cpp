#include "doctest.h"

#include "core/catalog.hpp"
#include "core/errors.hpp"

#include <string>

using namespace deltalink;

namespace {

const std::filesystem::path kData = DELTALINK_DATA_DIR;

const std::string kKnots =
    "[knot]\nname = 0_1\npd = O*1\nudelta = 0\narf = 0\n\n"
    "[knot]\nname = 3_1\npd = X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\nudelta = 1\narf = 1\n";

std::string whitehead_block(const std::string& extra) {
  return "[link]\nname_t = L5a1\nname_r = 5^2_1\n"
         "pd = X(5,1,6,4),X(1,5,2,10),X(7,2,8,3),X(3,8,4,9),X(9,6,10,7)\n"
         "components = 0_1,0_1\nu = 1\narf = 1\ng4 = 1\nmu1122_ref = 1\n"
         "udelta_expected = 1\nmethods_expected = half_unlinking\ntoroidal_obstruction = false\n" +
         extra;
}

}  // namespace

TEST_CASE("value grammars") {
  CHECK(parse_int_value(" 12 ") == 12);
  CHECK_THROWS_AS(parse_int_value("1.5"), ParseError);
  CHECK(parse_interval("1..2") == IntInterval{1, 2});
  CHECK(parse_interval("3") == IntInterval{3, 3});
  CHECK(parse_alternatives("4|6") == std::vector<int>{4, 6});
  CHECK_THROWS_AS(parse_alternatives("6|4"), ParseError);
  CHECK(parse_list("a, b,c") == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(parse_list("a,,b"), ParseError);
  CHECK(parse_bool("true"));
  CHECK_THROWS_AS(parse_bool("yes"), ParseError);
  CHECK(format_interval({1, 2}) == "1..2");
  CHECK(format_alternatives({4, 6}) == "4|6");
}

TEST_CASE("bundled dataset loads") {
  auto c = Catalog::load(kData / "catalog.txt");
  CHECK(c.links().size() == 34);
  CHECK(c.knots().size() == 5);
  REQUIRE(c.find_link("L9a2") != nullptr);
  CHECK(c.find_link("9^2_31") == c.find_link("L9a2"));
  CHECK(c.find_link("L9a2")->udelta_expected == std::vector<int>{2});
  CHECK(c.find_link("L9a14")->udelta_expected == std::vector<int>{4, 6});
  CHECK(c.find_link("L9a8")->g4 == IntInterval{1, 2});
  CHECK(c.find_link("L9a18")->toroidal_obstruction);
  CHECK(c.find_link("L6a4")->diagram.num_components() == 3);
  CHECK_FALSE(c.find_link("L6a4")->mu1122_ref.has_value());
  CHECK(c.find_link("NoSuchLink") == nullptr);
  CHECK(c.pathway_files().size() >= 3);
  for (const auto& l : c.links()) CHECK(is_algebraically_split(l.diagram));
}

TEST_CASE("computed columns agree with the dataset") {
  auto c = Catalog::load(kData / "catalog.txt");
  int notes = 0;
  for (const auto& line : validate_against_computation(c)) {
    INFO(line.record << " " << line.field << " expected " << line.expected << " computed " << line.computed);
    CHECK(line.severity != CheckSeverity::Fail);
    if (line.severity == CheckSeverity::Note) {
      ++notes;
      CHECK(line.record == "L9a10");
    }
  }
  CHECK(notes == 1);
}

TEST_CASE("a minimal catalog") {
  auto c = Catalog::parse("# header\n" + whitehead_block("") + "\n" + kKnots, kData);
  CHECK(c.links().size() == 1);
  auto lines = validate_against_computation(c);
  for (const auto& l : lines) CHECK(l.severity == CheckSeverity::Pass);
}

TEST_CASE("invalid records are rejected at load") {
  auto bad = [&](const std::string& link) { return Catalog::parse(link + "\n" + kKnots, kData); };
  // parity of the expected value disagrees with the Arf invariant
  std::string wrong_parity = whitehead_block("");
  wrong_parity.replace(wrong_parity.find("udelta_expected = 1"), 19, "udelta_expected = 2");
  CHECK_THROWS_AS(bad(wrong_parity), ValidationError);
  // Hopf link: nonzero linking number
  std::string hopf = whitehead_block("");
  hopf.replace(hopf.find("pd = "), hopf.find("\ncomponents") - hopf.find("pd = "), "pd = X-(3,2,4,1),X-(1,4,2,3)");
  CHECK_THROWS_AS(bad(hopf), ValidationError);
  CHECK_THROWS_AS(bad(whitehead_block("colour = red\n")), ValidationError);
  CHECK_THROWS_AS(bad(whitehead_block("toroidal_obstruction = true\n")), ParseError);
  std::string unknown_knot = whitehead_block("");
  unknown_knot.replace(unknown_knot.find("0_1,0_1"), 7, "0_1,9_9");
  CHECK_THROWS_AS(bad(unknown_knot), ValidationError);
  std::string three = whitehead_block("");
  three.replace(three.find("0_1,0_1"), 7, "0_1,0_1,0_1");
  CHECK_THROWS_AS(bad(three), ValidationError);
  CHECK_THROWS_AS(Catalog::parse("name = x\n", kData), ParseError);
  CHECK_THROWS_AS(Catalog::parse("[table]\n", kData), ParseError);
  CHECK_THROWS_AS(Catalog::parse("[knot]\nname = 3_1\npd = X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\nudelta = 1\narf = 0\n", kData),
                  ValidationError);
  CHECK_THROWS_AS(Catalog::load(kData / "missing.txt"), LookupError);
}
