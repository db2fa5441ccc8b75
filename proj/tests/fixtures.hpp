// Worked examples transcribed for tests and the acceptance run.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/frieze.hpp"

namespace fixtures {

using friezekit::Cluster;
using friezekit::KSubset;

// Digits as elements: ks(9, "9127") = {1,2,7,9}.
inline KSubset ks(int n, std::string_view digits) {
  std::vector<int> e;
  for (char c : digits) e.push_back(c - '0');
  return KSubset::from_elements(n, e);
}

inline std::vector<KSubset> subsets(int n, std::initializer_list<const char*> labels) {
  std::vector<KSubset> out;
  for (const char* l : labels) out.push_back(ks(n, l));
  return out;
}

// The (2,5) cluster with its 12-arrow quiver.
inline Cluster pentagon_cluster() {
  return Cluster::validated(2, 5, subsets(5, {"12", "23", "34", "45", "15", "14", "24"}));
}

inline std::vector<std::pair<KSubset, KSubset>> pentagon_arrows() {
  const char* pairs[][2] = {{"45", "14"}, {"14", "24"}, {"24", "34"}, {"34", "45"},
                            {"12", "14"}, {"14", "15"}, {"15", "12"}, {"24", "12"},
                            {"23", "24"}, {"34", "23"}, {"12", "23"}, {"15", "45"}};
  std::vector<std::pair<KSubset, KSubset>> out;
  for (auto& p : pairs) out.emplace_back(ks(5, p[0]), ks(5, p[1]));
  return out;
}

// The rectangular (4,9) cluster.
inline Cluster grid49_cluster() {
  return Cluster::validated(
      4, 9, subsets(9, {"7891", "5678", "6789", "4567", "8912", "1234", "3456", "9123", "2345", "2789", "2678",
                        "3678", "4678", "1278", "2378", "2367", "3467", "9127", "1237", "2347", "3457"}));
}

// The 43 arrows drawn for the (4,9) cluster, as sorted digit strings.
inline std::vector<std::pair<KSubset, KSubset>> grid49_arrows() {
  const char* pairs[][2] = {
      {"1234", "1237"}, {"1234", "2345"}, {"1237", "1239"}, {"1237", "1278"}, {"1237", "2347"},
      {"1239", "1234"}, {"1239", "1279"}, {"1278", "1279"}, {"1278", "2378"}, {"1279", "1237"},
      {"1279", "1289"}, {"1289", "1239"}, {"1289", "1789"}, {"1789", "2789"}, {"2345", "2347"},
      {"2345", "3456"}, {"2347", "1234"}, {"2347", "2367"}, {"2347", "3457"}, {"2367", "2378"},
      {"2367", "3467"}, {"2378", "1237"}, {"2378", "2678"}, {"2678", "2789"}, {"2678", "3678"},
      {"2789", "1278"}, {"2789", "6789"}, {"3456", "3457"}, {"3457", "2345"}, {"3457", "3467"},
      {"3467", "2347"}, {"3467", "3678"}, {"3467", "4567"}, {"3678", "2367"}, {"3678", "4678"},
      {"4567", "3456"}, {"4567", "4678"}, {"4678", "3467"}, {"4678", "5678"}, {"5678", "4567"},
      {"5678", "6789"}, {"6789", "1789"}, {"6789", "2678"}};
  std::vector<std::pair<KSubset, KSubset>> out;
  for (auto& p : pairs) out.emplace_back(ks(9, p[0]), ks(9, p[1]));
  return out;
}

// Non-interval members of the snake cluster for n = 7.
inline std::vector<KSubset> quad7_inner() { return subsets(7, {"126", "236", "235", "267", "256", "356"}); }

struct PrintedFrieze {
  friezekit::FriezeVariant variant;
  int n;
  std::vector<std::vector<long long>> rows;  // non-trivial rows 1..width

  friezekit::Frieze frieze() const { return friezekit::Frieze(variant, n, rows); }
};

// Coxeter friezes of periods 5, 6, 6.
inline std::vector<PrintedFrieze> coxeter_friezes() {
  using friezekit::FriezeVariant;
  return {
      {FriezeVariant::sl2, 5, {{3, 1, 2, 2, 1}, {2, 1, 3, 1, 2}}},
      {FriezeVariant::sl2, 6, {{3, 1, 3, 1, 3, 1}, {2, 2, 2, 2, 2, 2}, {3, 1, 3, 1, 3, 1}}},
      {FriezeVariant::sl2, 6, {{4, 1, 2, 2, 2, 1}, {3, 1, 3, 3, 1, 3}, {2, 1, 4, 1, 2, 2}}},
  };
}

// The two SL3 friezes of period 6.
inline std::vector<PrintedFrieze> sl3_friezes() {
  using friezekit::FriezeVariant;
  return {
      {FriezeVariant::sl3, 6, {{2, 4, 1, 2, 4, 1}, {4, 2, 1, 4, 2, 1}}},
      {FriezeVariant::sl3, 6, {{2, 3, 2, 1, 6, 1}, {3, 3, 1, 3, 3, 1}}},
  };
}

}  // namespace fixtures
