#include "friezekit/friezekit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "friezekit/error.hpp"
#include "friezekit/io.hpp"

using namespace friezekit;

struct fk_cluster {
  Cluster value;
};

struct fk_frieze {
  Frieze value;
};

struct fk_enumeration {
  EnumerationReport value;
};

namespace {

thread_local std::string last_error;

fk_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return FK_ERR_INVALID_INPUT;
    case ErrorKind::degenerate_input: return FK_ERR_DEGENERATE;
    case ErrorKind::validation_failed: return FK_ERR_VALIDATION;
    case ErrorKind::frozen_vertex: return FK_ERR_FROZEN;
    case ErrorKind::not_mutable: return FK_ERR_NOT_MUTABLE;
    case ErrorKind::ambiguous: return FK_ERR_AMBIGUOUS;
    case ErrorKind::internal_inconsistency: return FK_ERR_INCONSISTENT;
    case ErrorKind::saturation_stalled: return FK_ERR_STALLED;
    case ErrorKind::non_integral: return FK_ERR_NON_INTEGRAL;
    case ErrorKind::guard_exceeded: return FK_ERR_GUARD;
  }
  return FK_ERR_INTERNAL;
}

template <typename F>
fk_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return FK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fk_status null_argument() {
  last_error = "null argument";
  return FK_ERR_NULL_ARGUMENT;
}

std::string join(const CheckReport& r) {
  std::string out;
  for (const auto& p : r.passed) out += "ok: " + p + "\n";
  for (const auto& f : r.failures) out += "FAIL: " + f + "\n";
  return out;
}

}  // namespace

extern "C" {

FK_API const char* fk_last_error(void) { return last_error.c_str(); }

FK_API const char* fk_status_name(fk_status status) {
  switch (status) {
    case FK_OK: return "ok";
    case FK_ERR_INVALID_INPUT: return "invalid-input";
    case FK_ERR_DEGENERATE: return "degenerate-input";
    case FK_ERR_VALIDATION: return "validation-failed";
    case FK_ERR_FROZEN: return "frozen";
    case FK_ERR_NOT_MUTABLE: return "not-mutable";
    case FK_ERR_AMBIGUOUS: return "ambiguous";
    case FK_ERR_INCONSISTENT: return "internal-inconsistency";
    case FK_ERR_STALLED: return "saturation-stalled";
    case FK_ERR_NON_INTEGRAL: return "non-integral";
    case FK_ERR_GUARD: return "guard-exceeded";
    case FK_ERR_NULL_ARGUMENT: return "null-argument";
    case FK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

FK_API void fk_string_free(char* s) { std::free(s); }

FK_API fk_status fk_digest(const char* bytes, size_t len, char** hex_out) {
  if ((!bytes && len) || !hex_out) return null_argument();
  return guarded([&] { *hex_out = dup_string(digest_hex(std::string_view(bytes ? bytes : "", len))); });
}

FK_API fk_status fk_cluster_from_json(const char* json, fk_cluster** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = new fk_cluster{cluster_from_json(json)}; });
}

FK_API fk_status fk_cluster_quadrilateral(int n, fk_cluster** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new fk_cluster{quadrilateral_cluster(n)}; });
}

FK_API fk_status fk_cluster_seed(int k, int n, fk_cluster** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new fk_cluster{seed_cluster(k, n)}; });
}

FK_API void fk_cluster_free(fk_cluster* c) { delete c; }

FK_API int fk_cluster_k(const fk_cluster* c) { return c ? c->value.k() : 0; }
FK_API int fk_cluster_n(const fk_cluster* c) { return c ? c->value.n() : 0; }
FK_API size_t fk_cluster_size(const fk_cluster* c) { return c ? c->value.size() : 0; }

FK_API fk_status fk_cluster_to_json(const fk_cluster* c, char** out) {
  if (!c || !out) return null_argument();
  return guarded([&] { *out = dup_string(cluster_to_json(c->value)); });
}

FK_API fk_status fk_cluster_is_rectangular(const fk_cluster* c, int* out) {
  if (!c || !out) return null_argument();
  return guarded([&] { *out = is_rectangular(c->value) ? 1 : 0; });
}

FK_API fk_status fk_cluster_mutate(const fk_cluster* c, const int* subset, size_t len, fk_cluster** out) {
  if (!c || !subset || !out) return null_argument();
  return guarded([&] {
    const auto j = KSubset::from_elements(c->value.n(), std::span<const int>(subset, len));
    *out = new fk_cluster{mutate_subset(c->value, j)};
  });
}

FK_API fk_status fk_cluster_quiver_dot(const fk_cluster* c, const char* input_digest, char** out) {
  if (!c || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(quiver_to_dot(quiver_from_cluster(c->value), input_digest ? input_digest : "none"));
  });
}

FK_API fk_status fk_cluster_tiling_svg(const fk_cluster* c, fk_arc_side side, const char* input_digest,
                                       char** out) {
  if (!c || !out) return null_argument();
  return guarded([&] {
    const ArcSide s = side == FK_UPPER ? ArcSide::upper : ArcSide::lower;
    const auto tri = superimposed_from_cluster(c->value, s);
    QuiddityVector q;
    if (c->value.k() == 3) q = arc_quiddity(c->value, s);
    *out = dup_string(superimposed_to_svg(tri, q, input_digest ? input_digest : "none"));
  });
}

FK_API fk_status fk_cluster_quiddity(const fk_cluster* c, const char* kind, long long* values, size_t cap,
                                     size_t* len) {
  if (!c || !kind || !len || (!values && cap)) return null_argument();
  return guarded([&] {
    const auto q = cluster_quiddity(c->value, parse_quiddity_kind(kind));
    *len = q.values.size();
    if (cap < q.values.size()) fail(ErrorKind::invalid_input, "output buffer too small");
    std::copy(q.values.begin(), q.values.end(), values);
  });
}

FK_API fk_status fk_pluecker_solve_json(const fk_cluster* c, char** table_json) {
  if (!c || !table_json) return null_argument();
  return guarded([&] { *table_json = dup_string(table_to_json(solve_from_cluster(c->value))); });
}

FK_API fk_status fk_pluecker_check_json(const char* table_json, char** report, int* ok) {
  if (!table_json || !report || !ok) return null_argument();
  return guarded([&] {
    const auto t = table_from_json(table_json);
    if (!t.complete()) fail(ErrorKind::invalid_input, "table does not cover every subset");
    std::string text;
    bool good = true;
    auto add = [&](const char* name, const RelationReport& r) {
      text += std::string(name) + ": " + std::to_string(r.instances) + " instances, " +
              std::to_string(r.violations.size()) + " violations\n";
      for (const auto& v : r.violations)
        text += "  " + v.instance + ": " + v.lhs.str() + " vs " + v.rhs.str() + "\n";
      good = good && r.ok();
    };
    add("three-term relations", check_short_relations(t));
    if (t.k() >= 2) add("alternating relations", check_long_relations(t));
    *report = dup_string(text);
    *ok = good ? 1 : 0;
  });
}

FK_API fk_status fk_frieze_sl2_from_quiddity(const long long* quiddity, size_t n, fk_frieze** out) {
  if (!quiddity || !out) return null_argument();
  return guarded([&] {
    QuiddityVector q{std::vector<long long>(quiddity, quiddity + n)};
    *out = new fk_frieze{build_sl2_from_quiddity(q)};
  });
}

FK_API fk_status fk_frieze_sl3_from_cluster(const fk_cluster* c, fk_frieze** out) {
  if (!c || !out) return null_argument();
  return guarded([&] { *out = new fk_frieze{build_sl3_from_cluster(c->value)}; });
}

FK_API fk_status fk_frieze_from_json(const char* json, fk_frieze** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = new fk_frieze{frieze_from_json(json)}; });
}

FK_API void fk_frieze_free(fk_frieze* f) { delete f; }
FK_API int fk_frieze_n(const fk_frieze* f) { return f ? f->value.n() : 0; }
FK_API int fk_frieze_width(const fk_frieze* f) { return f ? f->value.width() : 0; }

FK_API fk_status fk_frieze_entry(const fk_frieze* f, int row, int column, long long* out) {
  if (!f || !out) return null_argument();
  return guarded([&] { *out = f->value.at(row, column); });
}

FK_API fk_status fk_frieze_to_json(const fk_frieze* f, char** out) {
  if (!f || !out) return null_argument();
  return guarded([&] { *out = dup_string(frieze_to_json(f->value)); });
}

FK_API fk_status fk_frieze_render(const fk_frieze* f, char** out) {
  if (!f || !out) return null_argument();
  return guarded([&] { *out = dup_string(render(f->value)); });
}

FK_API fk_status fk_frieze_validate(const fk_frieze* f, char** report, int* ok) {
  if (!f || !report || !ok) return null_argument();
  return guarded([&] {
    const auto r = validate(f->value);
    std::string text = std::to_string(r.checks) + " checks, " + std::to_string(r.violations.size()) + " violations\n";
    for (const auto& v : r.violations) text += "  " + v + "\n";
    *report = dup_string(text);
    *ok = r.ok() ? 1 : 0;
  });
}

FK_API fk_status fk_enumerate(int k, int n, fk_enumeration** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new fk_enumeration{enumerate_clusters(k, n)}; });
}

FK_API fk_status fk_enumeration_from_json(const char* json, fk_enumeration** out) {
  if (!json || !out) return null_argument();
  return guarded([&] { *out = new fk_enumeration{enumeration_from_json(json)}; });
}

FK_API void fk_enumeration_free(fk_enumeration* e) { delete e; }
FK_API size_t fk_enumeration_count(const fk_enumeration* e) { return e ? e->value.cluster_count : 0; }
FK_API size_t fk_enumeration_rectangular_count(const fk_enumeration* e) {
  return e ? e->value.rectangular_count : 0;
}

FK_API fk_status fk_enumeration_cluster(const fk_enumeration* e, size_t index, fk_cluster** out) {
  if (!e || !out) return null_argument();
  return guarded([&] {
    if (index >= e->value.clusters.size()) fail(ErrorKind::invalid_input, "cluster index out of range");
    *out = new fk_cluster{e->value.clusters[index]};
  });
}

FK_API fk_status fk_enumeration_to_json(const fk_enumeration* e, int with_clusters, char** out) {
  if (!e || !out) return null_argument();
  return guarded([&] { *out = dup_string(enumeration_to_json(e->value, with_clusters != 0)); });
}

FK_API fk_status fk_check_json(const char* json, char** report, int* ok) {
  if (!json || !report || !ok) return null_argument();
  return guarded([&] {
    std::string text;
    bool good = true;
    auto probe = nlohmann::json::parse(json, nullptr, false);
    if (probe.is_object() && probe.contains("clusters")) {
      const auto e = enumeration_from_json(json);
      std::size_t idx = 0, bad = 0;
      for (const auto& c : e.clusters) {
        const auto r = check_collection(c.k(), c.n(), c.members());
        if (!r.ok()) {
          ++bad;
          text += "cluster " + std::to_string(idx) + ":\n" + join(r);
        }
        ++idx;
      }
      // Recount from scratch so a stale report is caught too.
      const auto fresh = enumerate_clusters(e.k, e.n);
      if (fresh.clusters != e.clusters) {
        good = false;
        text += "FAIL: listed clusters differ from a fresh enumeration (" + std::to_string(fresh.cluster_count) +
                " clusters)\n";
      }
      text += std::to_string(idx) + " clusters checked, " + std::to_string(bad) + " with failures\n";
      good = good && bad == 0;
    } else {
      const auto raw = collection_from_json(json);
      const auto r = check_collection(raw.k, raw.n, raw.members);
      text = join(r);
      good = r.ok();
    }
    *report = dup_string(text);
    *ok = good ? 1 : 0;
  });
}

FK_API fk_status fk_cross_validate_gr2(int n, int corrupt, size_t* triangulations, size_t* mismatches) {
  if (!triangulations || !mismatches) return null_argument();
  return guarded([&] {
    const auto r = cross_validate_gr2(n, corrupt != 0);
    *triangulations = r.triangulations;
    *mismatches = r.mismatches.size();
  });
}

}  // extern "C"
