#include "friezekit/io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "friezekit/error.hpp"

namespace friezekit {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) { return fmt::format("{:016x}", fnv1a64(bytes)); }

std::vector<long long> parse_integer_list(std::string_view text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::invalid_input, "empty entry in '" + std::string(text) + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) fail(ErrorKind::invalid_input, "'" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) fail(ErrorKind::invalid_input, "empty list");
  return out;
}

QuiddityVector parse_quiddity(std::string_view text) {
  QuiddityVector q{parse_integer_list(text)};
  for (long long v : q.values)
    if (v < 1) fail(ErrorKind::invalid_input, "quiddity entries must be positive");
  return q;
}

std::string format_quiddity(const QuiddityVector& q) {
  std::string out;
  for (long long v : q.values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::invalid_input, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorKind::invalid_input, std::string("field '") + key + "' has the wrong type");
  }
}

Json subset_json(const KSubset& s) { return Json(s.elements()); }

KSubset subset_from(const Json& j, int n) {
  if (!j.is_array()) fail(ErrorKind::invalid_input, "a subset is an array of residues");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::invalid_input, "residues are integers");
    e.push_back(x.get<int>());
  }
  return KSubset::from_elements(n, e);
}

std::string comma_label(const KSubset& s) {
  std::string out;
  for (int x : s.elements()) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

Json cluster_json(const Cluster& c) {
  Json j;
  j["k"] = c.k();
  j["n"] = c.n();
  Json subsets = Json::array();
  for (const auto& s : c.members()) subsets.push_back(subset_json(s));
  j["subsets"] = subsets;
  return j;
}

RawCollection collection_from(const Json& j) {
  RawCollection raw{field<int>(j, "k"), field<int>(j, "n"), {}};
  if (raw.n < 2 || raw.n > kMaxN || raw.k < 1 || raw.k >= raw.n)
    fail(ErrorKind::invalid_input, "need 1 <= k < n <= " + std::to_string(kMaxN));
  const auto subsets = field<Json>(j, "subsets");
  if (!subsets.is_array()) fail(ErrorKind::invalid_input, "'subsets' must be an array");
  for (const auto& s : subsets) {
    auto sub = subset_from(s, raw.n);
    if (sub.size() != raw.k)
      fail(ErrorKind::invalid_input, "{" + sub.label() + "} does not have " + std::to_string(raw.k) + " elements");
    raw.members.push_back(sub);
  }
  return raw;
}

}  // namespace

std::string cluster_to_json(const Cluster& c) { return cluster_json(c).dump() + "\n"; }

RawCollection collection_from_json(std::string_view text) { return collection_from(parse(text)); }

Cluster cluster_from_json(std::string_view text) {
  auto raw = collection_from_json(text);
  return Cluster::validated(raw.k, raw.n, std::move(raw.members));
}

std::string table_to_json(const PlueckerTable& t) {
  Json j;
  j["k"] = t.k();
  j["n"] = t.n();
  Json values = Json::object();
  for (const auto& [s, v] : t.values()) {
    const auto key = comma_label(s);
    if (denominator(v) == 1 && abs(numerator(v)) < boost::multiprecision::cpp_int(1) << 62)
      values[key] = static_cast<long long>(numerator(v));
    else
      values[key] = v.str();
  }
  j["values"] = values;
  return j.dump() + "\n";
}

PlueckerTable table_from_json(std::string_view text) {
  const auto j = parse(text);
  PlueckerTable t(field<int>(j, "k"), field<int>(j, "n"));
  const auto values = field<Json>(j, "values");
  if (!values.is_object()) fail(ErrorKind::invalid_input, "'values' must be an object");
  for (const auto& [key, v] : values.items()) {
    std::vector<int> e;
    for (long long x : parse_integer_list(key)) e.push_back(static_cast<int>(x));
    Rational r;
    if (v.is_number_integer())
      r = v.get<long long>();
    else if (v.is_string()) {
      try {
        r = Rational(v.get<std::string>());
      } catch (const std::exception&) {
        fail(ErrorKind::invalid_input, "bad rational '" + v.get<std::string>() + "'");
      }
    } else
      fail(ErrorKind::invalid_input, "value for " + key + " must be an integer or a rational string");
    t.set(KSubset::from_elements(t.n(), e), r);
  }
  return t;
}

std::string frieze_to_json(const Frieze& f) {
  Json j;
  j["variant"] = to_string(f.variant());
  j["n"] = f.n();
  j["rows"] = f.rows();
  return j.dump() + "\n";
}

Frieze frieze_from_json(std::string_view text) {
  const auto j = parse(text);
  const auto variant = field<std::string>(j, "variant");
  FriezeVariant v;
  if (variant == "SL2")
    v = FriezeVariant::sl2;
  else if (variant == "SL3")
    v = FriezeVariant::sl3;
  else
    fail(ErrorKind::invalid_input, "variant must be SL2 or SL3");
  return Frieze(v, field<int>(j, "n"), field<std::vector<std::vector<long long>>>(j, "rows"));
}

std::string enumeration_to_json(const EnumerationReport& r, bool with_clusters) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["cluster_count"] = r.cluster_count;
  j["rectangular_count"] = r.rectangular_count;
  if (with_clusters) {
    Json list = Json::array();
    for (const auto& c : r.clusters) {
      Json subsets = Json::array();
      for (const auto& s : c.members()) subsets.push_back(subset_json(s));
      list.push_back(subsets);
    }
    j["clusters"] = list;
  }
  return j.dump() + "\n";
}

EnumerationReport enumeration_from_json(std::string_view text) {
  const auto j = parse(text);
  EnumerationReport r;
  r.k = field<int>(j, "k");
  r.n = field<int>(j, "n");
  r.cluster_count = field<std::size_t>(j, "cluster_count");
  r.rectangular_count = field<std::size_t>(j, "rectangular_count");
  if (j.contains("clusters")) {
    for (const auto& list : j.at("clusters")) {
      std::vector<KSubset> members;
      for (const auto& s : list) members.push_back(subset_from(s, r.n));
      r.clusters.push_back(Cluster::validated(r.k, r.n, std::move(members)));
    }
    if (r.clusters.size() != r.cluster_count)
      fail(ErrorKind::invalid_input, "cluster_count does not match the listed clusters");
  }
  return r;
}

std::string quiver_to_dot(const Quiver& q, std::string_view input_digest) {
  std::string out = fmt::format("// generator: friezekit quiver, input fnv1a64 {}\n", input_digest);
  out += fmt::format("digraph quiver_{}_{} {{\n", q.k(), q.n());
  for (const auto& v : q.vertices())
    out += fmt::format("  \"{}\" [shape={}];\n", block_label(v), q.is_frozen(v) ? "box" : "ellipse");
  for (const auto& a : q.arrows())
    out += fmt::format("  \"{}\" -> \"{}\";\n", block_label(a.tail), block_label(a.head));
  out += "}\n";
  return out;
}

std::string superimposed_to_svg(const SuperimposedTriangulation& s, const QuiddityVector& q,
                                std::string_view input_digest) {
  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  const int n = s.n;
  const double cx = 200, cy = 200, radius = 140;
  auto point = [&](int v, double r) {
    const double theta = 2 * std::numbers::pi * (v - 1) / n;
    return std::pair{cx + r * std::sin(theta), cy - r * std::cos(theta)};
  };
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format("<!-- generator: friezekit tiling, {} arcs, input fnv1a64 {} -->\n", to_string(s.side),
                     input_digest);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  std::string poly;
  for (int v = 1; v <= n; ++v) {
    auto [x, y] = point(v, radius);
    poly += fmt::format("{}{:.3f},{:.3f}", v == 1 ? "" : " ", x, y);
  }
  out += fmt::format("  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n", poly);
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    const auto& t = s.layers[l];
    out += fmt::format("  <g class=\"layer\" data-tiling=\"{},{}\" stroke=\"{}\" stroke-width=\"2\"{}>\n", t.b, t.r,
                       palette[l % std::size(palette)], l % 2 ? " stroke-dasharray=\"6,3\"" : "");
    for (const auto& a : t.arcs) {
      auto [x1, y1] = point(a.lo(), radius);
      auto [x2, y2] = point(a.hi(), radius);
      out += fmt::format("    <line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n", x1, y1, x2, y2);
    }
    out += "  </g>\n";
  }
  for (int v = 1; v <= n; ++v) {
    auto [x, y] = point(v, radius);
    out += fmt::format("  <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"black\"/>\n", x, y);
    auto [lx, ly] = point(v, radius - 16);
    out += fmt::format(
        "  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\">{}</text>\n",
        lx, ly, v);
    if (q.n() == n) {
      auto [qx, qy] = point(v, radius + 22);
      out += fmt::format(
          "  <text class=\"quiddity\" x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"16\" font-weight=\"bold\" "
          "text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>\n",
          qx, qy, q.at(v));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace friezekit
