#include "friezekit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "friezekit/error.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/geometry.hpp"
#include "friezekit/pluecker.hpp"

namespace friezekit {

namespace {

std::string crossing_text(const KSubset& a, const KSubset& b) {
  return "{" + a.label() + "} and {" + b.label() + "} cross";
}

std::vector<KSubset> intervals(int k, int n) {
  std::vector<KSubset> out;
  for (int s = 1; s <= n; ++s) out.push_back(KSubset::interval(n, s, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool brute_force_is_maximal(int k, int n, const std::vector<KSubset>& collection) {
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = i + 1; j < collection.size(); ++j)
      if (!weakly_separated(collection[i], collection[j]))
        fail(ErrorKind::invalid_input, crossing_text(collection[i], collection[j]));
  const std::set<KSubset> have(collection.begin(), collection.end());
  for (const auto& s : all_subsets(k, n)) {
    if (have.count(s)) continue;
    if (std::all_of(collection.begin(), collection.end(),
                    [&](const KSubset& m) { return weakly_separated(s, m); }))
      return false;
  }
  return true;
}

Cluster seed_cluster(int k, int n) {
  if (k == 3 && n >= 6) return quadrilateral_cluster(n);
  std::vector<KSubset> members = intervals(k, n);
  if (k == 2) {
    for (int j = 3; j <= n - 1; ++j) members.push_back(KSubset(n, {1, j}));
  } else {
    // Rectangle cluster: {1..k-i} together with a block of i shifted right by j.
    for (int i = 1; i <= k - 1; ++i)
      for (int j = 1; j <= n - k - 1; ++j) {
        std::uint64_t mask = KSubset::interval(n, 1, k - i).mask() |
                             KSubset::interval(n, k - i + j + 1, i).mask();
        members.push_back(KSubset::from_mask(n, mask));
      }
  }
  return Cluster::validated(k, n, std::move(members));
}

EnumerationReport enumerate_clusters_from(const Cluster& seed) {
  const int k = seed.k(), n = seed.n();
  if (k * (n - k) > 20)
    fail(ErrorKind::guard_exceeded, "enumeration limited to k(n-k) <= 20, got " + std::to_string(k * (n - k)));
  std::set<Cluster> seen{seed};
  std::deque<Cluster> queue{seed};
  while (!queue.empty()) {
    Cluster c = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : c.members()) {
      if (is_interval(s) || !is_mutable(c, s)) continue;
      Cluster next = mutate_subset(c, s);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  EnumerationReport report{k, n, {seen.begin(), seen.end()}, seen.size(), 0};
  report.rectangular_count = static_cast<std::size_t>(
      std::count_if(report.clusters.begin(), report.clusters.end(), [](const Cluster& c) { return is_rectangular(c); }));
  return report;
}

EnumerationReport enumerate_clusters(int k, int n) {
  if (k < 1 || n <= k || k * (n - k) > 20)
    fail(ErrorKind::guard_exceeded, "enumeration limited to 1 <= k < n with k(n-k) <= 20");
  return enumerate_clusters_from(seed_cluster(k, n));
}

namespace {

// Bron-Kerbosch with pivoting over bitmask adjacency (at most 64 vertices).
void maximal_cliques(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                     const std::vector<std::uint64_t>& adj, std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  const std::uint64_t px = p | x;
  const int pivot = std::countr_zero(px);
  std::uint64_t cand = p & ~adj[static_cast<std::size_t>(pivot)];
  while (cand) {
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    maximal_cliques(r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], adj, out);
    p &= ~bit;
    x |= bit;
    cand &= ~bit;
  }
}

}  // namespace

std::vector<std::vector<KSubset>> brute_force_clusters(int k, int n) {
  const auto fixed = intervals(k, n);
  std::vector<KSubset> free;
  for (const auto& s : all_subsets(k, n))
    if (!is_interval(s)) free.push_back(s);
  if (free.size() > 64) fail(ErrorKind::guard_exceeded, "too many subsets for the clique search");
  std::vector<std::uint64_t> adj(free.size(), 0);
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = 0; j < free.size(); ++j)
      if (i != j && weakly_separated(free[i], free[j])) adj[i] |= std::uint64_t{1} << j;
  std::vector<std::uint64_t> found;
  const std::uint64_t all = free.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << free.size()) - 1;
  if (free.empty())
    found.push_back(0);
  else
    maximal_cliques(0, all, 0, adj, found);
  std::vector<std::vector<KSubset>> out;
  for (std::uint64_t m : found) {
    std::vector<KSubset> members = fixed;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (m >> i & 1) members.push_back(free[i]);
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Gr2Report cross_validate_gr2(int n, bool corrupt) {
  if (n < 5 || n > 9) fail(ErrorKind::invalid_input, "Gr(2,n) cross-check runs for 5 <= n <= 9");
  Gr2Report report{n, 0, {}};
  for (const auto& tri : all_triangulations(n)) {
    ++report.triangulations;
    std::string name;
    for (const auto& a : tri) name += "(" + std::to_string(a.lo()) + "," + std::to_string(a.hi()) + ")";
    try {
      std::vector<KSubset> members = intervals(2, n);
      for (const auto& a : tri) members.push_back(KSubset(n, {a.lo(), a.hi()}));
      const auto from_solver = sl2_from_table(solve_from_cluster(Cluster::validated(2, n, members)));
      auto q = cc_quiddity_from_triangulation(tri, n);
      if (corrupt) ++q.values[0];
      const auto from_rule = build_sl2_from_quiddity(q);
      if (!(from_solver == from_rule)) report.mismatches.push_back(name + ": entries differ");
    } catch (const Error& e) {
      report.mismatches.push_back(name + ": " + e.what());
    }
  }
  return report;
}

CheckReport check_collection(int k, int n, const std::vector<KSubset>& collection) {
  CheckReport report;
  std::vector<KSubset> members = collection;
  std::sort(members.begin(), members.end());
  for (const auto& s : members)
    if (s.n() != n || s.size() != k) {
      report.failures.push_back("{" + s.label() + "} is not a " + std::to_string(k) + "-subset of 1.." + std::to_string(n));
      return report;
    }
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    report.failures.push_back("repeated member");
    return report;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!weakly_separated(members[i], members[j])) report.failures.push_back(crossing_text(members[i], members[j]));
  if (!report.ok()) return report;
  report.passed.push_back("pairwise weakly separated");

  const bool maximal = brute_force_is_maximal(k, n, members);
  const bool count_ok = members.size() == expected_cluster_size(k, n);
  if (maximal)
    report.passed.push_back("maximal by exhaustive scan");
  else
    report.failures.push_back("not maximal: some outside subset is separated from every member");
  if (maximal != count_ok)
    report.failures.push_back("scan and member count disagree on maximality");
  if (!maximal) return report;

  const auto c = Cluster::validated(k, n, members);
  try {
    const auto q = quiver_from_cluster(c);
    const auto bad = q.invariant_violations();
    if (bad.empty())
      report.passed.push_back("quiver consistent (" + std::to_string(q.arrows().size()) + " arrows)");
    else
      for (const auto& b : bad) report.failures.push_back("quiver: " + b);
  } catch (const Error& e) {
    report.failures.push_back(std::string("quiver: ") + e.what());
  }

  if (!is_rectangular(c)) {
    report.passed.push_back("not rectangular; pairing and clique-size checks skipped");
    return report;
  }
  std::size_t pairing_bad = 0;
  for (const auto& s : c.members()) {
    if (is_interval(s)) continue;
    const auto p = check_prop_pairing(c, s);
    for (const auto& v : p.violations) report.failures.push_back("pairing at {" + s.label() + "}: " + v);
    pairing_bad += !p.ok();
  }
  if (!pairing_bad) report.passed.push_back("pairing rule holds at every non-interval member");
  std::size_t clique_bad = 0;
  for (const auto& q : cliques(c)) {
    if (q.has_interval_member()) continue;
    if (q.members.size() < 3 || q.members.size() > 4) {
      ++clique_bad;
      report.failures.push_back("internal clique at {" + q.defining_set.label() + "} has " +
                                std::to_string(q.members.size()) + " members");
    }
  }
  if (!clique_bad) report.passed.push_back("internal cliques have 3 or 4 members");
  try {
    superimposed_from_cluster(c, ArcSide::lower);
    superimposed_from_cluster(c, ArcSide::upper);
    report.passed.push_back("lower and upper superimposed triangulations valid");
  } catch (const Error& e) {
    report.failures.push_back(std::string("superimposed triangulation: ") + e.what());
  }
  return report;
}

}  // namespace friezekit
