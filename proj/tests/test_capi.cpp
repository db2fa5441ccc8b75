#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

#include "friezekit/friezekit.h"

namespace {

struct StringFree {
  void operator()(char* s) const { fk_string_free(s); }
};
using CString = std::unique_ptr<char, StringFree>;

std::string take(char* s) { return std::string(CString(s).get()); }

const char* kPentagon = "{\"k\":2,\"n\":5,\"subsets\":[[1,2],[2,3],[3,4],[4,5],[1,5],[1,4],[2,4]]}";

}  // namespace

TEST_CASE("status names and digests") {
  CHECK(std::string(fk_status_name(FK_OK)) == "ok");
  CHECK(std::string(fk_status_name(FK_ERR_FROZEN)) != "ok");
  char* hex = nullptr;
  REQUIRE(fk_digest("a", 1, &hex) == FK_OK);
  CHECK(take(hex) == "af63dc4c8601ec8c");
  CHECK(fk_digest("a", 1, nullptr) == FK_ERR_NULL_ARGUMENT);
}

TEST_CASE("cluster handles") {
  fk_cluster* c = nullptr;
  REQUIRE(fk_cluster_from_json(kPentagon, &c) == FK_OK);
  CHECK(fk_cluster_k(c) == 2);
  CHECK(fk_cluster_n(c) == 5);
  CHECK(fk_cluster_size(c) == 7);
  int rect = 0;
  CHECK(fk_cluster_is_rectangular(c, &rect) == FK_OK);
  CHECK(rect == 1);

  const int j[] = {2, 4};
  fk_cluster* m = nullptr;
  REQUIRE(fk_cluster_mutate(c, j, 2, &m) == FK_OK);
  char* json = nullptr;
  REQUIRE(fk_cluster_to_json(m, &json) == FK_OK);
  CHECK(take(json).find("[1,3]") != std::string::npos);
  fk_cluster_free(m);

  const int frozen[] = {1, 2};
  m = nullptr;
  CHECK(fk_cluster_mutate(c, frozen, 2, &m) == FK_ERR_FROZEN);
  CHECK(m == nullptr);
  CHECK(std::string(fk_last_error()).find("12") != std::string::npos);

  char* dot = nullptr;
  REQUIRE(fk_cluster_quiver_dot(c, "00", &dot) == FK_OK);
  CHECK(take(dot).find("digraph quiver_2_5") != std::string::npos);
  fk_cluster_free(c);

  CHECK(fk_cluster_from_json("{\"k\":2,\"n\":4,\"subsets\":[[1,2],[2,3],[3,4],[1,4],[1,3],[2,4]]}", &c) ==
        FK_ERR_VALIDATION);
  CHECK(fk_cluster_from_json("{", &c) == FK_ERR_INVALID_INPUT);
  CHECK(fk_cluster_from_json(nullptr, &c) == FK_ERR_NULL_ARGUMENT);
  fk_cluster_free(nullptr);
}

TEST_CASE("quiddities, tilings and tables") {
  fk_cluster* c = nullptr;
  REQUIRE(fk_cluster_quadrilateral(7, &c) == FK_OK);
  long long q[7];
  size_t len = 0;
  REQUIRE(fk_cluster_quiddity(c, "lower", q, 7, &len) == FK_OK);
  CHECK(len == 7);
  CHECK(std::vector<long long>(q, q + 7) == std::vector<long long>{2, 5, 2, 1, 4, 4, 1});
  CHECK(fk_cluster_quiddity(c, "lower", q, 3, &len) == FK_ERR_INVALID_INPUT);
  CHECK(fk_cluster_quiddity(c, "sideways", q, 7, &len) == FK_ERR_INVALID_INPUT);

  char* svg = nullptr;
  REQUIRE(fk_cluster_tiling_svg(c, FK_UPPER, "00", &svg) == FK_OK);
  CHECK(take(svg).find("upper arcs") != std::string::npos);

  char* table = nullptr;
  REQUIRE(fk_pluecker_solve_json(c, &table) == FK_OK);
  const std::string t = take(table);
  CHECK(t.find("\"1,3,7\":4") != std::string::npos);
  char* report = nullptr;
  int ok = 0;
  REQUIRE(fk_pluecker_check_json(t.c_str(), &report, &ok) == FK_OK);
  fk_string_free(report);
  CHECK(ok == 1);

  std::string bad = t;
  bad.replace(bad.find("\"1,3,7\":4"), 9, "\"1,3,7\":5");
  REQUIRE(fk_pluecker_check_json(bad.c_str(), &report, &ok) == FK_OK);
  fk_string_free(report);
  CHECK(ok == 0);

  fk_frieze* f = nullptr;
  REQUIRE(fk_frieze_sl3_from_cluster(c, &f) == FK_OK);
  CHECK(fk_frieze_width(f) == 3);
  long long v = 0;
  REQUIRE(fk_frieze_entry(f, 0, 1, &v) == FK_OK);
  CHECK(v == 1);
  fk_frieze_free(f);
  fk_cluster_free(c);
}

TEST_CASE("frieze handles") {
  const long long q[] = {3, 1, 3, 1, 3, 1};
  fk_frieze* f = nullptr;
  REQUIRE(fk_frieze_sl2_from_quiddity(q, 6, &f) == FK_OK);
  CHECK(fk_frieze_n(f) == 6);
  CHECK(fk_frieze_width(f) == 3);
  long long v = 0;
  REQUIRE(fk_frieze_entry(f, 2, 4, &v) == FK_OK);
  CHECK(v == 2);
  char* json = nullptr;
  REQUIRE(fk_frieze_to_json(f, &json) == FK_OK);
  fk_frieze* back = nullptr;
  REQUIRE(fk_frieze_from_json(take(json).c_str(), &back) == FK_OK);
  char* report = nullptr;
  int ok = 0;
  REQUIRE(fk_frieze_validate(back, &report, &ok) == FK_OK);
  fk_string_free(report);
  CHECK(ok == 1);
  char* text = nullptr;
  REQUIRE(fk_frieze_render(back, &text) == FK_OK);
  CHECK(take(text).find('2') != std::string::npos);
  fk_frieze_free(back);
  fk_frieze_free(f);

  const long long ones[] = {1, 1, 1, 1};
  CHECK(fk_frieze_sl2_from_quiddity(ones, 4, &f) != FK_OK);
  CHECK(std::string(fk_last_error()).size() > 0);
}

TEST_CASE("enumeration handles") {
  fk_enumeration* e = nullptr;
  REQUIRE(fk_enumerate(2, 6, &e) == FK_OK);
  CHECK(fk_enumeration_count(e) == 14);
  CHECK(fk_enumeration_rectangular_count(e) == 14);
  fk_cluster* c = nullptr;
  REQUIRE(fk_enumeration_cluster(e, 0, &c) == FK_OK);
  fk_cluster_free(c);
  CHECK(fk_enumeration_cluster(e, 14, &c) == FK_ERR_INVALID_INPUT);

  char* json = nullptr;
  REQUIRE(fk_enumeration_to_json(e, 1, &json) == FK_OK);
  const std::string doc = take(json);
  char* report = nullptr;
  int ok = 0;
  REQUIRE(fk_check_json(doc.c_str(), &report, &ok) == FK_OK);
  fk_string_free(report);
  CHECK(ok == 1);
  fk_enumeration_free(e);

  CHECK(fk_enumerate(4, 10, &e) == FK_ERR_GUARD);

  size_t tri = 0, bad = 0;
  REQUIRE(fk_cross_validate_gr2(6, 0, &tri, &bad) == FK_OK);
  CHECK(tri == 14);
  CHECK(bad == 0);
  REQUIRE(fk_cross_validate_gr2(6, 1, &tri, &bad) == FK_OK);
  CHECK(bad > 0);
}
