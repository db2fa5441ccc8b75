#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/geometry.hpp"
#include "friezekit/oracle.hpp"
#include "friezekit/pluecker.hpp"

namespace friezekit {

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

// "2,4" -> {2, 4}; whitespace around entries is ignored.
std::vector<long long> parse_integer_list(std::string_view text);
QuiddityVector parse_quiddity(std::string_view text);
std::string format_quiddity(const QuiddityVector& q);  // space separated

struct RawCollection {
  int k = 0;
  int n = 0;
  std::vector<KSubset> members;
};

// {"k":3,"n":7,"subsets":[[1,2,3],...]}
std::string cluster_to_json(const Cluster& c);
RawCollection collection_from_json(std::string_view text);
Cluster cluster_from_json(std::string_view text);

// {"k":3,"n":7,"values":{"1,2,6":1,...}}
std::string table_to_json(const PlueckerTable& t);
PlueckerTable table_from_json(std::string_view text);

// {"variant":"SL3","n":7,"rows":[[...],...]}
std::string frieze_to_json(const Frieze& f);
Frieze frieze_from_json(std::string_view text);

std::string enumeration_to_json(const EnumerationReport& r, bool with_clusters);
EnumerationReport enumeration_from_json(std::string_view text);

// Vertices named by block labels ("123,7"); frozen boxes, mutable ellipses.
std::string quiver_to_dot(const Quiver& q, std::string_view input_digest);

// Polygon with vertex 1 at the top and labels running clockwise; each layer
// drawn in its own colour, quiddity values outside the vertices.
std::string superimposed_to_svg(const SuperimposedTriangulation& s, const QuiddityVector& q,
                                std::string_view input_digest);

}  // namespace friezekit
