#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "friezekit/error.hpp"
#include "friezekit/geometry.hpp"
#include "friezekit/oracle.hpp"

using namespace friezekit;
using fixtures::ks;

namespace {

std::vector<std::vector<KSubset>> as_lists(const EnumerationReport& r) {
  std::vector<std::vector<KSubset>> out;
  for (const auto& c : r.clusters) out.push_back(c.members());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("k = 2 counts are Catalan numbers") {
    const std::size_t catalan[] = {2, 5, 14, 42, 132};
    for (int n = 4; n <= 8; ++n) {
      const auto r = enumerate_clusters(2, n);
      CHECK(r.cluster_count == catalan[n - 4]);
      CHECK(r.rectangular_count == r.cluster_count);
    }
  }

  TEST_CASE("mutation closure agrees with clique search") {
    for (auto [k, n] : {std::pair{2, 5}, std::pair{2, 6}, std::pair{3, 6}, std::pair{3, 7}}) {
      const auto r = enumerate_clusters(k, n);
      auto brute = brute_force_clusters(k, n);
      for (auto& b : brute) std::sort(b.begin(), b.end());
      std::sort(brute.begin(), brute.end());
      CHECK(as_lists(r) == brute);
      for (const auto& c : r.clusters) {
        REQUIRE(c.size() == expected_cluster_size(k, n));
        for (int i = 1; i <= n; ++i) REQUIRE(c.contains(KSubset::interval(n, i, k)));
      }
    }
    CHECK(enumerate_clusters(3, 6).cluster_count == 34);
    CHECK(enumerate_clusters(3, 6).rectangular_count == 18);
  }

  TEST_CASE("closure does not depend on the seed") {
    const auto base = enumerate_clusters(3, 7);
    const auto other = enumerate_clusters_from(base.clusters.back());
    CHECK(as_lists(other) == as_lists(base));
    CHECK(as_lists(enumerate_clusters_from(quadrilateral_cluster(7))) == as_lists(base));
  }

  TEST_CASE("guard") {
    try {
      enumerate_clusters(4, 10);
      FAIL("no guard");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::guard_exceeded);
    }
  }

  TEST_CASE("maximality scan") {
    const auto c = fixtures::pentagon_cluster();
    CHECK(brute_force_is_maximal(2, 5, c.members()));
    auto fewer = c.members();
    fewer.erase(std::find(fewer.begin(), fewer.end(), ks(5, "24")));
    CHECK_FALSE(brute_force_is_maximal(2, 5, fewer));
    auto crossing = fewer;
    crossing.push_back(ks(5, "13"));
    crossing.push_back(ks(5, "24"));
    CHECK_THROWS_AS(brute_force_is_maximal(2, 5, crossing), Error);
  }

  TEST_CASE("SL2 solver agrees with triangle-count friezes") {
    const std::size_t catalan[] = {5, 14, 42, 132};
    for (int n = 5; n <= 8; ++n) {
      const auto r = cross_validate_gr2(n);
      CHECK(r.triangulations == catalan[n - 5]);
      CHECK(r.ok());
    }
    const auto bad = cross_validate_gr2(6, true);
    CHECK_FALSE(bad.ok());
  }

  TEST_CASE("collection checks") {
    CHECK(check_collection(4, 9, fixtures::grid49_cluster().members()).ok());
    CHECK(check_collection(3, 7, quadrilateral_cluster(7).members()).ok());
    auto fewer = fixtures::grid49_cluster().members();
    fewer.erase(std::find(fewer.begin(), fewer.end(), ks(9, "2367")));
    CHECK_FALSE(check_collection(4, 9, fewer).ok());
    auto crossing = fixtures::pentagon_cluster().members();
    crossing.push_back(ks(5, "13"));
    CHECK_FALSE(check_collection(2, 5, crossing).ok());
  }
}
