#pragma once

#include <compare>
#include <span>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/combinat.hpp"

namespace friezekit {

// A diagonal of the n-gon; endpoints stored with lo < hi.
class Arc {
 public:
  Arc(int n, int x, int y);

  int n() const noexcept { return n_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  bool touches(int v) const noexcept { return v == lo_ || v == hi_; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;

 private:
  int n_;
  int lo_;
  int hi_;
};

// Interiors intersect: no shared endpoint and the endpoints interleave.
bool arcs_cross(const Arc& a, const Arc& b);
// Some endpoint of a is next to some endpoint of b on the boundary.
bool arcs_have_adjacent_endpoints(const Arc& a, const Arc& b);

enum class ArcSide { lower, upper };

const char* to_string(ArcSide side) noexcept;

Arc lower_arc(const KSubset& s);
Arc upper_arc(const KSubset& s);
Arc chosen_arc(const KSubset& s, ArcSide side);

// Faces of the dissection cut out by pairwise non-crossing arcs, each as a clockwise vertex cycle.
std::vector<std::vector<int>> polygon_faces(int n, std::span<const Arc> arcs);

struct Tiling {
  int n = 0;
  int b = 0;
  int r = 0;
  std::vector<Arc> arcs;  // sorted, distinct
};

// Validates non-crossing and the face structure {b+2, r+2, triangles...}.
Tiling make_tiling(int n, int b, int r, std::vector<Arc> arcs);

// Every crossing pair of arcs has a pair of adjacent endpoints.
bool arc_sets_compatible(std::span<const Arc> first, std::span<const Arc> second);
bool tilings_noncrossing(const Tiling& t1, const Tiling& t2);

Tiling row_tiling(const Cluster& c, int l, ArcSide side = ArcSide::lower);

struct SuperimposedTriangulation {
  int n = 0;
  int k = 0;
  ArcSide side = ArcSide::lower;
  std::vector<Tiling> layers;  // layer j is a (j, k-j)-tiling
};

SuperimposedTriangulation superimposed_from_cluster(const Cluster& c, ArcSide side);

// Zig-zag triangulation; `labeling` (a permutation of 1..n, or empty for the identity)
// renames the polygon vertices.
std::vector<Arc> snake_triangulation(int n, std::span<const int> labeling = {});

Cluster quadrilateral_cluster(int n);

// The non-interval members of the quadrilateral cluster written out as four families
// of 3-subsets; `literal_ranges` uses the narrower index ranges as first written down.
std::vector<KSubset> quadrilateral_family(int n, bool literal_ranges);

struct QuiddityVector {
  std::vector<long long> values;  // values[i-1] belongs to vertex i

  int n() const noexcept { return static_cast<int>(values.size()); }
  long long at(int vertex) const { return values.at(static_cast<std::size_t>(vertex - 1)); }
  friend bool operator==(const QuiddityVector&, const QuiddityVector&) = default;
};

// 1 + number of non-interval members whose chosen arc touches each vertex.
QuiddityVector arc_quiddity(const Cluster& c, ArcSide side);

// Triangles at each vertex of a full triangulation.
QuiddityVector cc_quiddity_from_triangulation(std::span<const Arc> arcs, int n);

std::vector<std::vector<Arc>> all_triangulations(int n);

}  // namespace friezekit
