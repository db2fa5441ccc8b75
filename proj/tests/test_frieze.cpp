#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "friezekit/error.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/oracle.hpp"

using namespace friezekit;

TEST_SUITE("frieze") {
  TEST_CASE("printed SL2 friezes") {
    for (const auto& p : fixtures::coxeter_friezes()) {
      const auto f = p.frieze();
      CHECK(validate_sl2(f).ok());
      CHECK(build_sl2_from_quiddity(QuiddityVector{p.rows.front()}) == f);
      CHECK(f.width() == frieze_width(FriezeVariant::sl2, p.n));
    }
    const auto mid = build_sl2_from_quiddity(QuiddityVector{{3, 1, 3, 1, 3, 1}});
    CHECK(mid.rows()[1] == std::vector<long long>(6, 2));
  }

  TEST_CASE("borders") {
    const auto f = fixtures::coxeter_friezes()[0].frieze();
    for (int i = 1; i <= 5; ++i) {
      CHECK(f.at(-1, i) == 0);
      CHECK(f.at(0, i) == 1);
      CHECK(f.at(3, i) == 1);
      CHECK(f.at(4, i) == 0);
      CHECK(f.at(1, i) == f.at(1, i + 5));
    }
    CHECK_THROWS_AS(f.at(5, 1), Error);
  }

  TEST_CASE("builder rejects non-quiddities") {
    CHECK_THROWS_AS(build_sl2_from_quiddity(QuiddityVector{{1, 1, 1, 1}}), Error);
    CHECK_THROWS_AS(build_sl2_from_quiddity(QuiddityVector{{2, 2, 2, 2, 2}}), Error);
    CHECK_THROWS_AS(build_sl2_from_quiddity(QuiddityVector{{1, 2, 1}}), Error);
  }

  TEST_CASE("glide symmetry") {
    for (int n = 4; n <= 9; ++n)
      for (const auto& t : all_triangulations(n)) {
        const auto f = build_sl2_from_quiddity(cc_quiddity_from_triangulation(t, n));
        REQUIRE(validate_sl2(f).ok());
        const int w = f.width();
        for (int r = 0; r <= w + 1; ++r)
          for (int i = 1; i <= n; ++i) REQUIRE(f.at(r, i) == f.at(w + 1 - r, i + r + 1));
      }
  }

  TEST_CASE("printed SL3 friezes") {
    for (const auto& p : fixtures::sl3_friezes()) {
      const auto f = p.frieze();
      const auto report = validate_sl3(f);
      CHECK(report.ok());
      CHECK(report.checks > 0);
      for (std::size_t r = 0; r < p.rows.size(); ++r)
        for (std::size_t i = 0; i < p.rows[r].size(); ++i) {
          auto rows = p.rows;
          rows[r][i] += 1;
          CHECK_FALSE(validate_sl3(Frieze(p.variant, p.n, rows)).ok());
        }
    }
    auto rows = fixtures::sl3_friezes()[0].rows;
    for (auto& v : rows[0])
      if (v == 4) {
        v = 5;
        break;
      }
    CHECK_FALSE(validate_sl3(Frieze(FriezeVariant::sl3, 6, rows)).ok());
  }

  TEST_CASE("SL3 friezes from every small cluster") {
    for (int n : {6, 7})
      for (const auto& c : enumerate_clusters(3, n).clusters) {
        const auto f = build_sl3_from_cluster(c);
        REQUIRE(f.width() == n - 4);
        REQUIRE(validate_sl3(f).ok());
      }
  }

  TEST_CASE("quiddity readings of the (3,7) quadrilateral cluster") {
    const auto c = quadrilateral_cluster(7);
    const auto f = build_sl3_from_cluster(c);
    CHECK(f.width() == 3);
    const std::vector<long long> lower{2, 5, 2, 1, 4, 4, 1};
    const std::vector<long long> upper{1, 4, 4, 1, 2, 5, 2};
    CHECK(extract_quiddity(f, QuiddityKind::forwards).values == lower);
    CHECK(extract_quiddity(f, QuiddityKind::reverse).values == upper);
    CHECK(cluster_quiddity(c, QuiddityKind::lower).values == lower);
    CHECK(cluster_quiddity(c, QuiddityKind::upper).values == upper);
    CHECK_THROWS_AS(extract_quiddity(f, QuiddityKind::lower), Error);
    CHECK_THROWS_AS(extract_quiddity(fixtures::coxeter_friezes()[0].frieze(), QuiddityKind::forwards), Error);
  }

  TEST_CASE("arc readings match frieze readings for n = 6..10") {
    for (int n = 6; n <= 10; ++n) {
      const auto c = quadrilateral_cluster(n);
      CHECK(cluster_quiddity(c, QuiddityKind::forwards) == cluster_quiddity(c, QuiddityKind::lower));
      CHECK(cluster_quiddity(c, QuiddityKind::reverse) == cluster_quiddity(c, QuiddityKind::upper));
    }
  }

  TEST_CASE("quiddity kind names") {
    for (auto k : {QuiddityKind::forwards, QuiddityKind::reverse, QuiddityKind::lower, QuiddityKind::upper})
      CHECK(parse_quiddity_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_quiddity_kind("sideways"), Error);
  }

  TEST_CASE("rendering") {
    const auto mid = build_sl2_from_quiddity(QuiddityVector{{3, 1, 3, 1, 3, 1}});
    const auto text = render(mid);
    std::istringstream in(text);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    REQUIRE(lines.size() == 5);
    CHECK(std::count(lines[2].begin(), lines[2].end(), '2') == 6);
    CHECK(lines[2].find_first_not_of("2 ") == std::string::npos);
    CHECK(parse_rendered(text) == mid);

    for (const auto& p : fixtures::coxeter_friezes()) CHECK(parse_rendered(render(p.frieze())) == p.frieze());
    for (const auto& p : fixtures::sl3_friezes()) {
      const auto t = render(p.frieze());
      CHECK(std::count(t.begin(), t.end(), '\n') == 4);
      CHECK(parse_rendered(t) == p.frieze());
    }
    const auto big = build_sl3_from_cluster(quadrilateral_cluster(9));
    CHECK(parse_rendered(render(big)) == big);
    CHECK(render(big) == render(big));
    CHECK_THROWS_AS(parse_rendered("1 1\n2\n"), Error);
  }
}
