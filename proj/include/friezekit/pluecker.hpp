#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "friezekit/cluster.hpp"
#include "friezekit/combinat.hpp"

namespace friezekit {

using Rational = boost::multiprecision::cpp_rational;

class PlueckerTable {
 public:
  PlueckerTable(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::map<KSubset, Rational>& values() const noexcept { return values_; }

  std::optional<Rational> get(const KSubset& s) const;
  // Throws invalid_input when the subset has no value.
  const Rational& at(const KSubset& s) const;
  void set(const KSubset& s, Rational v);
  bool complete() const;

  // Value of an arbitrary index tuple under antisymmetry (zero on repeats).
  Rational signed_value(std::span<const int> tuple) const;

  friend bool operator==(const PlueckerTable&, const PlueckerTable&) = default;

 private:
  int k_;
  int n_;
  std::map<KSubset, Rational> values_;
};

enum class ScanOrder { forward, reverse };

// Every member set to 1, the rest filled in from the three-term relations.
PlueckerTable solve_from_cluster(const Cluster& c, ScanOrder order = ScanOrder::forward);

struct RelationViolation {
  std::string instance;
  Rational lhs;
  Rational rhs;
};

struct RelationReport {
  std::size_t instances = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

RelationReport check_short_relations(const PlueckerTable& t);

enum class LongRelationSign {
  alternating,  // (-1)^r on the r-th term
  power_of_n,   // (-1)^n on every term
};

RelationReport check_long_relations(const PlueckerTable& t,
                                    LongRelationSign sign = LongRelationSign::alternating);

}  // namespace friezekit
