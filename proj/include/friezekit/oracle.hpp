#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "friezekit/cluster.hpp"

namespace friezekit {

// No k-subset outside the collection is weakly separated from every member.
// Throws invalid_input when the collection itself has a crossing pair.
bool brute_force_is_maximal(int k, int n, const std::vector<KSubset>& collection);

struct EnumerationReport {
  int k = 0;
  int n = 0;
  std::vector<Cluster> clusters;  // sorted
  std::size_t cluster_count = 0;
  std::size_t rectangular_count = 0;
};

// Starting cluster for the mutation search.
Cluster seed_cluster(int k, int n);

// Breadth-first closure under mutate_subset; k(n-k) <= 20 or guard_exceeded.
EnumerationReport enumerate_clusters(int k, int n);
EnumerationReport enumerate_clusters_from(const Cluster& seed);

// Every maximal weakly separated collection, by maximal-clique search on the
// compatibility graph (no mutation, no count criterion).
std::vector<std::vector<KSubset>> brute_force_clusters(int k, int n);

struct Gr2Report {
  int n = 0;
  std::size_t triangulations = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// For each triangulation of the n-gon, compare the solver frieze with the
// frieze grown from the triangle counts. `corrupt` bumps the first count.
Gr2Report cross_validate_gr2(int n, bool corrupt = false);

struct CheckReport {
  std::vector<std::string> passed;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Independent checks on a raw collection: pairwise separation, maximality by
// scan, quiver consistency and, for rectangular clusters, the pairing rule and
// clique sizes.
CheckReport check_collection(int k, int n, const std::vector<KSubset>& collection);

}  // namespace friezekit
