#include <doctest.h>

#include <array>

#include "fixtures.hpp"
#include "friezekit/error.hpp"
#include "friezekit/geometry.hpp"
#include "friezekit/oracle.hpp"
#include "friezekit/pluecker.hpp"

using namespace friezekit;
using fixtures::ks;

namespace {

// Vectors v_1 = e1, v_2 = e2, v_{i+1} = a_i v_i - v_{i-1}; det(v_i, v_j) reproduces
// the Pluecker point of a triangulated polygon with triangle counts a.
std::vector<std::array<long long, 2>> continuant_vectors(const QuiddityVector& a) {
  const int n = a.n();
  std::vector<std::array<long long, 2>> v(static_cast<std::size_t>(n + 1));
  v[1] = {1, 0};
  v[2] = {0, 1};
  for (int i = 2; i < n; ++i) {
    const auto& p = v[static_cast<std::size_t>(i - 1)];
    const auto& c = v[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(i + 1)] = {a.at(i) * c[0] - p[0], a.at(i) * c[1] - p[1]};
  }
  return v;
}

Cluster triangulation_cluster(int n, const std::vector<Arc>& arcs) {
  std::vector<KSubset> members;
  for (int i = 1; i <= n; ++i) members.push_back(KSubset::interval(n, i, 2));
  for (const auto& a : arcs) members.push_back(KSubset(n, {a.lo(), a.hi()}));
  return Cluster::validated(2, n, members);
}

}  // namespace

TEST_SUITE("pluecker") {
  TEST_CASE("(2,5) example") {
    const auto c = fixtures::pentagon_cluster();
    const auto t = solve_from_cluster(c);
    CHECK(t.complete());
    CHECK(t.at(ks(5, "13")) == 2);
    CHECK(t.at(ks(5, "25")) == 2);
    for (const auto& s : c.members()) CHECK(t.at(s) == 1);
    const auto r = check_short_relations(t);
    CHECK(r.instances == 5);
    CHECK(r.ok());
  }

  TEST_CASE("k = 2 values agree with continuant determinants") {
    for (int n = 5; n <= 8; ++n)
      for (const auto& tri : all_triangulations(n)) {
        const auto q = cc_quiddity_from_triangulation(tri, n);
        const auto v = continuant_vectors(q);
        const auto t = solve_from_cluster(triangulation_cluster(n, tri));
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const auto& x = v[static_cast<std::size_t>(i)];
            const auto& y = v[static_cast<std::size_t>(j)];
            REQUIRE(t.at(KSubset(n, {i, j})) == x[0] * y[1] - x[1] * y[0]);
          }
      }
  }

  TEST_CASE("antisymmetric lookup") {
    const auto t = solve_from_cluster(fixtures::pentagon_cluster());
    const int fwd[] = {1, 3}, back[] = {3, 1}, same[] = {2, 2};
    CHECK(t.signed_value(fwd) == 2);
    CHECK(t.signed_value(back) == -2);
    CHECK(t.signed_value(same) == 0);
  }

  TEST_CASE("negative control for the short relations") {
    auto t = solve_from_cluster(fixtures::pentagon_cluster());
    t.set(ks(5, "13"), 3);
    CHECK_FALSE(check_short_relations(t).ok());
  }

  TEST_CASE("(3,7) quadrilateral values") {
    const auto t = solve_from_cluster(quadrilateral_cluster(7));
    const auto r = check_short_relations(t);
    CHECK(r.instances == 7 * 15);
    CHECK(r.ok());
    CHECK(check_long_relations(t).ok());
    for (const auto& [s, v] : t.values()) {
      CHECK(denominator(v) == 1);
      CHECK(v > 0);
    }
    CHECK(t.at(ks(7, "137")) == 4);
    CHECK(t.at(ks(7, "134")) == 5);
    CHECK(t.at(ks(7, "135")) == 4);
    CHECK(t.at(ks(7, "136")) == 3);
    CHECK(t.at(ks(7, "156")) == 2);
    CHECK(t.at(ks(7, "236")) == 1);
  }

  TEST_CASE("solutions do not depend on scan order and satisfy both relation families") {
    for (auto [k, n] : {std::pair{2, 5}, std::pair{2, 6}, std::pair{3, 6}, std::pair{3, 7}})
      for (const auto& c : enumerate_clusters(k, n).clusters) {
        const auto a = solve_from_cluster(c, ScanOrder::forward);
        REQUIRE(a == solve_from_cluster(c, ScanOrder::reverse));
        REQUIRE(check_short_relations(a).ok());
        if (k == 3) REQUIRE(check_long_relations(a).ok());
      }
  }

  TEST_CASE("constant sign in the long relation fails") {
    const auto t = solve_from_cluster(quadrilateral_cluster(7));
    CHECK_FALSE(check_long_relations(t, LongRelationSign::power_of_n).ok());
    const auto u = solve_from_cluster(seed_cluster(3, 6));
    CHECK_FALSE(check_long_relations(u, LongRelationSign::power_of_n).ok());
  }

  TEST_CASE("unsupported rank") {
    CHECK_THROWS_AS(solve_from_cluster(fixtures::grid49_cluster()), Error);
    PlueckerTable t(3, 6);
    CHECK_FALSE(t.complete());
    CHECK_THROWS_AS(t.at(KSubset(6, {1, 2, 3})), Error);
  }
}
