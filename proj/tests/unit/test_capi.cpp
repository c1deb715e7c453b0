#include "doctest.h"

#include "deltalink/deltalink.h"

#include <string>

namespace {

const std::string kData = DELTALINK_DATA_DIR;

std::string take(char* s) {
  std::string out = s ? s : "";
  dl_string_free(s);
  return out;
}

dl_catalog* bundled() {
  static dl_catalog* c = [] {
    dl_catalog* out = nullptr;
    REQUIRE(dl_catalog_load((kData + "/catalog.txt").c_str(), &out) == DL_OK);
    return out;
  }();
  return c;
}

}  // namespace

TEST_CASE("diagram handles") {
  dl_diagram* d = nullptr;
  REQUIRE(dl_diagram_parse("X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)", &d) == DL_OK);
  size_t n = 0;
  CHECK(dl_diagram_components(d, &n) == DL_OK);
  CHECK(n == 1);
  CHECK(dl_diagram_crossings(d, &n) == DL_OK);
  CHECK(n == 3);
  int arf = -1;
  CHECK(dl_diagram_arf_knot(d, &arf) == DL_OK);
  CHECK(arf == 1);
  char* text = nullptr;
  CHECK(dl_diagram_alexander(d, &text) == DL_OK);
  CHECK(take(text) == "1 - t + t^2");
  CHECK(dl_diagram_invariants_report(d, &text) == DL_OK);
  CHECK(take(text).find("arf: 1") != std::string::npos);
  long long mu = 0;
  CHECK(dl_diagram_milnor_1122(d, &mu) == DL_ERR_VALIDATION);
  CHECK(std::string(dl_last_error()).size() > 0);
  int lk = 0;
  CHECK(dl_diagram_linking_number(d, 0, 1, &lk) == DL_ERR_INVALID_ARGUMENT);
  dl_diagram_free(d);

  CHECK(dl_diagram_parse("X(1,1,2,2", &d) == DL_ERR_PARSE);
  CHECK(dl_diagram_parse(nullptr, &d) == DL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dl_status_name(DL_ERR_PARSE)) == "parse error");
}

TEST_CASE("catalog handles") {
  dl_catalog* c = bundled();
  size_t n = 0;
  CHECK(dl_catalog_link_count(c, &n) == DL_OK);
  CHECK(n == 34);
  char* name = nullptr;
  CHECK(dl_catalog_link_name(c, 0, &name) == DL_OK);
  CHECK(take(name) == "L5a1");
  CHECK(dl_catalog_link_name(c, 34, &name) == DL_ERR_INVALID_ARGUMENT);

  dl_diagram* d = nullptr;
  REQUIRE(dl_resolve(c, "L9a2", &d) == DL_OK);
  long long mu = 0;
  CHECK(dl_diagram_milnor_1122(d, &mu) == DL_OK);
  CHECK(mu == 1);
  dl_diagram_free(d);
  CHECK(dl_resolve(c, "NoSuchLink", &d) == DL_ERR_NOT_FOUND);
  CHECK(dl_resolve(c, "O*2", &d) == DL_OK);
  dl_diagram_free(d);

  dl_catalog* missing = nullptr;
  CHECK(dl_catalog_load("/nonexistent/catalog.txt", &missing) == DL_ERR_IO);
}

TEST_CASE("reports") {
  dl_catalog* c = bundled();
  char* text = nullptr;
  REQUIRE(dl_bounds_report(c, "L9a18", &text) == DL_OK);
  auto report = take(text);
  CHECK(report.find("u^Delta: 3") != std::string::npos);
  CHECK(report.find("beta1_obstruction") != std::string::npos);
  CHECK(dl_bounds_report(c, "L99", &text) == DL_ERR_NOT_FOUND);

  char* diff = nullptr;
  int clean = 0;
  REQUIRE(dl_table_report(c, DL_FORMAT_CSV, &text, &diff, &clean) == DL_OK);
  CHECK(clean == 1);
  CHECK(take(text).find("L9a14,") != std::string::npos);
  take(diff);

  int passed = 0;
  REQUIRE(dl_verify_certificates(c, (kData + "/pathways/L9a2.path").c_str(), 'b', &text, &passed) == DL_OK);
  CHECK(passed == 1);
  CHECK(take(text).starts_with("PASS level b: L9a2"));
  REQUIRE(dl_verify_certificates(c, (kData + "/pathways/tree_indeterminate.path").c_str(), 'b', &text, &passed) ==
          DL_OK);
  CHECK(passed == 0);
  take(text);
  CHECK(dl_verify_certificates(c, (kData + "/pathways/L9a2.path").c_str(), 'c', &text, &passed) ==
        DL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("annular handles") {
  dl_annular* a = nullptr;
  REQUIRE(dl_annular_load((kData + "/annular/L9a18.ann").c_str(), &a) == DL_OK);
  int b = 0;
  CHECK(dl_annular_beta1(a, &b) == DL_OK);
  CHECK((b == 3 || b == -3));
  CHECK(dl_obstructs_single_toroidal_delta(b) == 1);
  dl_annular_free(a);
  CHECK(dl_annular_parse("O*1\ncut(1,1)\n", &a) != DL_OK);
  CHECK(dl_obstructs_single_toroidal_delta(2) == 0);
}
