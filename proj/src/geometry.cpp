#include "friezekit/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "friezekit/error.hpp"

namespace friezekit {

namespace {

bool adjacent(int x, int y, int n) {
  const int d = cyclic_distance(x, y, n);
  return d == 1 || d == n - 1;
}

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.lo()) + "," + std::to_string(a.hi()) + ")";
}

}  // namespace

Arc::Arc(int n, int x, int y) : n_(n), lo_(std::min(x, y)), hi_(std::max(x, y)) {
  if (n < 4 || x < 1 || y < 1 || x > n || y > n)
    fail(ErrorKind::invalid_input, "arc endpoints outside 1.." + std::to_string(n));
  if (x == y || adjacent(x, y, n))
    fail(ErrorKind::invalid_input,
         "(" + std::to_string(x) + "," + std::to_string(y) + ") is not a diagonal");
}

bool arcs_cross(const Arc& a, const Arc& b) {
  if (a.touches(b.lo()) || a.touches(b.hi())) return false;
  const bool lo_inside = a.lo() < b.lo() && b.lo() < a.hi();
  const bool hi_inside = a.lo() < b.hi() && b.hi() < a.hi();
  return lo_inside != hi_inside;
}

bool arcs_have_adjacent_endpoints(const Arc& a, const Arc& b) {
  const int n = a.n();
  for (int x : {a.lo(), a.hi()})
    for (int y : {b.lo(), b.hi()})
      if (adjacent(x, y, n)) return true;
  return false;
}

const char* to_string(ArcSide side) noexcept { return side == ArcSide::lower ? "lower" : "upper"; }

Arc lower_arc(const KSubset& s) {
  const auto b = block_decomposition(s);
  if (!b) fail(ErrorKind::invalid_input, "{" + s.label() + "} has more than two blocks");
  return Arc(s.n(), b->first.start, b->second.start);
}

Arc upper_arc(const KSubset& s) {
  const auto b = block_decomposition(s);
  if (!b) fail(ErrorKind::invalid_input, "{" + s.label() + "} has more than two blocks");
  return Arc(s.n(), b->first.end(s.n()), b->second.end(s.n()));
}

Arc chosen_arc(const KSubset& s, ArcSide side) {
  return side == ArcSide::lower ? lower_arc(s) : upper_arc(s);
}

std::vector<std::vector<int>> polygon_faces(int n, std::span<const Arc> arcs) {
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(n + 1));
  std::set<std::pair<int, int>> pending;
  for (int v = 1; v <= n; ++v) {
    nbr[static_cast<std::size_t>(v)].insert(wrap(v + 1, n));
    nbr[static_cast<std::size_t>(v)].insert(wrap(v - 1, n));
    pending.insert({v, wrap(v + 1, n)});
  }
  for (const auto& a : arcs) {
    nbr[static_cast<std::size_t>(a.lo())].insert(a.hi());
    nbr[static_cast<std::size_t>(a.hi())].insert(a.lo());
    pending.insert({a.lo(), a.hi()});
    pending.insert({a.hi(), a.lo()});
  }
  // Walk each face keeping it on the inside: at v, turn to the neighbour that
  // comes last clockwise before returning to u.
  std::vector<std::vector<int>> faces;
  while (!pending.empty()) {
    auto [u0, v0] = *pending.begin();
    std::vector<int> face{u0};
    int u = u0, v = v0;
    while (true) {
      pending.erase({u, v});
      if (v == u0) break;
      face.push_back(v);
      const int back = cyclic_distance(v, u, n);
      int best = -1, best_d = -1;
      for (int w : nbr[static_cast<std::size_t>(v)]) {
        const int d = cyclic_distance(v, w, n);
        if (d < back && d > best_d) {
          best_d = d;
          best = w;
        }
      }
      if (best < 0 || face.size() > static_cast<std::size_t>(n))
        fail(ErrorKind::internal_inconsistency, "face walk lost its way");
      u = v;
      v = best;
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

Tiling make_tiling(int n, int b, int r, std::vector<Arc> arcs) {
  if (b < 1 || r < 1) fail(ErrorKind::invalid_input, "tiling needs b, r >= 1");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (const auto& a : arcs)
    if (a.n() != n) fail(ErrorKind::invalid_input, "arc from a different polygon");
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j]))
        fail(ErrorKind::validation_failed, "arcs " + arc_text(arcs[i]) + " and " +
                                               arc_text(arcs[j]) + " cross");
  std::vector<std::size_t> sizes;
  for (const auto& f : polygon_faces(n, arcs)) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());

  std::vector<std::size_t> want{static_cast<std::size_t>(b + 2), static_cast<std::size_t>(r + 2)};
  const int triangles = n - b - r - 2;
  if (triangles < 0) fail(ErrorKind::validation_failed, "polygon too small for the tiling");
  want.insert(want.end(), static_cast<std::size_t>(triangles), 3);
  std::sort(want.begin(), want.end());
  if (sizes != want) {
    std::string got;
    for (auto s : sizes) got += (got.empty() ? "" : ",") + std::to_string(s);
    fail(ErrorKind::validation_failed, "faces {" + got + "} do not form a (" + std::to_string(b) +
                                           "," + std::to_string(r) + ")-tiling");
  }
  return Tiling{n, b, r, std::move(arcs)};
}

bool arc_sets_compatible(std::span<const Arc> first, std::span<const Arc> second) {
  for (const auto& a : first)
    for (const auto& b : second)
      if (arcs_cross(a, b) && !arcs_have_adjacent_endpoints(a, b)) return false;
  return true;
}

bool tilings_noncrossing(const Tiling& t1, const Tiling& t2) {
  if (t1.n != t2.n) fail(ErrorKind::invalid_input, "tilings of different polygons");
  return arc_sets_compatible(t1.arcs, t2.arcs);
}

Tiling row_tiling(const Cluster& c, int l, ArcSide side) {
  if (l < 1 || l > c.k() - 1)
    fail(ErrorKind::invalid_input, "row index " + std::to_string(l) + " outside 1.." +
                                       std::to_string(c.k() - 1));
  const auto rows = lattice_rows(c);
  std::vector<Arc> arcs;
  for (const auto& s : rows[static_cast<std::size_t>(l - 1)]) arcs.push_back(chosen_arc(s, side));
  return make_tiling(c.n(), l, c.k() - l, std::move(arcs));
}

SuperimposedTriangulation superimposed_from_cluster(const Cluster& c, ArcSide side) {
  SuperimposedTriangulation out{c.n(), c.k(), side, {}};
  for (int l = 1; l <= c.k() - 1; ++l) out.layers.push_back(row_tiling(c, l, side));
  for (std::size_t j = 0; j + 1 < out.layers.size(); ++j)
    if (!tilings_noncrossing(out.layers[j], out.layers[j + 1]))
      fail(ErrorKind::validation_failed, "layers " + std::to_string(j + 1) + " and " +
                                             std::to_string(j + 2) + " cross without adjacent endpoints");
  return out;
}

std::vector<Arc> snake_triangulation(int n, std::span<const int> labeling) {
  if (n < 4) fail(ErrorKind::invalid_input, "snake needs n >= 4");
  if (!labeling.empty()) {
    std::vector<int> sorted(labeling.begin(), labeling.end());
    std::sort(sorted.begin(), sorted.end());
    bool perm = static_cast<int>(sorted.size()) == n;
    for (int i = 0; perm && i < n; ++i) perm = sorted[static_cast<std::size_t>(i)] == i + 1;
    if (!perm) fail(ErrorKind::invalid_input, "labeling is not a permutation of 1..n");
  }
  auto name = [&](int v) { return labeling.empty() ? v : labeling[static_cast<std::size_t>(v - 1)]; };
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) {
    if (n - 2 * i >= 2) arcs.emplace_back(n, name(i), name(n - i));
    if (i >= 2 && n - 2 * i + 1 >= 2) arcs.emplace_back(n, name(i), name(n - i + 1));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

Cluster quadrilateral_cluster(int n) {
  if (n < 6) fail(ErrorKind::invalid_input, "quadrilateral cluster needs n >= 6");
  const auto snake = snake_triangulation(n);
  std::vector<KSubset> members;
  for (const auto& s : all_subsets(3, n)) {
    const auto runs = cyclic_runs(s);
    if (runs.size() == 1)
      members.push_back(s);
    else if (runs.size() == 2 && std::binary_search(snake.begin(), snake.end(), lower_arc(s)))
      members.push_back(s);
  }
  auto c = Cluster::validated(3, n, std::move(members));
  if (!is_rectangular(c)) fail(ErrorKind::internal_inconsistency, "quadrilateral cluster not rectangular");
  return c;
}

std::vector<KSubset> quadrilateral_family(int n, bool literal_ranges) {
  std::set<KSubset> out;
  auto add = [&](int x, int y, int z) {
    const int e[] = {wrap(x, n), wrap(y, n), wrap(z, n)};
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) return;
    auto s = KSubset::from_elements(n, e);
    if (!is_interval(s)) out.insert(s);
  };
  for (int i = 1; i <= n; ++i) {
    // 2i < n - 2 stands in for i < n/2 - 1 without fractions.
    const bool from1 = literal_ranges ? 2 * i < n - 2 : n - 2 * i >= 2;
    const bool from2 = i >= 2 && (literal_ranges ? 2 * i < n - 2 : n - 2 * i + 1 >= 2);
    const bool last = i >= 2 && (literal_ranges ? 2 * i < n : n - 2 * i + 1 >= 2);
    const bool third = literal_ranges ? from2 : from1;
    if (from1) add(i, i + 1, n - i);
    if (from2) add(i, i + 1, n - i + 1);
    if (third) add(i, n - i, n - i + 1);
    if (last) add(i, n - i + 1, n - i + 2);
  }
  return {out.begin(), out.end()};
}

QuiddityVector arc_quiddity(const Cluster& c, ArcSide side) {
  if (!is_rectangular(c)) fail(ErrorKind::invalid_input, "cluster is not rectangular");
  QuiddityVector q{std::vector<long long>(static_cast<std::size_t>(c.n()), 1)};
  for (const auto& s : c.members()) {
    if (is_interval(s)) continue;
    const Arc a = chosen_arc(s, side);
    ++q.values[static_cast<std::size_t>(a.lo() - 1)];
    ++q.values[static_cast<std::size_t>(a.hi() - 1)];
  }
  return q;
}

QuiddityVector cc_quiddity_from_triangulation(std::span<const Arc> arcs, int n) {
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) != n - 3)
    fail(ErrorKind::invalid_input, "a triangulation of the " + std::to_string(n) + "-gon has " +
                                       std::to_string(n - 3) + " distinct diagonals");
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].n() != n) fail(ErrorKind::invalid_input, "arc from a different polygon");
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (arcs_cross(sorted[i], sorted[j]))
        fail(ErrorKind::invalid_input, "diagonals " + arc_text(sorted[i]) + " and " +
                                           arc_text(sorted[j]) + " cross");
  }
  QuiddityVector q{std::vector<long long>(static_cast<std::size_t>(n), 1)};
  for (const auto& a : sorted) {
    ++q.values[static_cast<std::size_t>(a.lo() - 1)];
    ++q.values[static_cast<std::size_t>(a.hi() - 1)];
  }
  return q;
}

namespace {

// Triangulations of the convex polygon on the given vertices (in boundary order).
void triangulate(const std::vector<int>& poly, int n, std::vector<Arc>& current,
                 std::vector<std::vector<Arc>>& out) {
  if (poly.size() <= 3) {
    out.push_back(current);
    return;
  }
  // The edge poly[0]-poly.back() lies in exactly one triangle; choose its apex.
  const int a = poly.front(), z = poly.back();
  for (std::size_t m = 1; m + 1 < poly.size(); ++m) {
    std::vector<int> left(poly.begin(), poly.begin() + static_cast<long>(m) + 1);
    std::vector<int> right(poly.begin() + static_cast<long>(m), poly.end());
    const std::size_t mark = current.size();
    if (left.size() >= 3) current.emplace_back(n, a, poly[m]);
    if (right.size() >= 3) current.emplace_back(n, poly[m], z);
    std::vector<std::vector<Arc>> lefts;
    std::vector<Arc> scratch;
    triangulate(left, n, scratch, lefts);
    for (const auto& l : lefts) {
      const std::size_t mark2 = current.size();
      current.insert(current.end(), l.begin(), l.end());
      triangulate(right, n, current, out);
      current.erase(current.begin() + static_cast<long>(mark2), current.end());
    }
    current.erase(current.begin() + static_cast<long>(mark), current.end());
  }
}

}  // namespace

std::vector<std::vector<Arc>> all_triangulations(int n) {
  if (n < 4 || n > 14) fail(ErrorKind::invalid_input, "triangulation enumeration needs 4 <= n <= 14");
  std::vector<int> poly;
  for (int v = 1; v <= n; ++v) poly.push_back(v);
  std::vector<std::vector<Arc>> out;
  std::vector<Arc> current;
  triangulate(poly, n, current, out);
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace friezekit
