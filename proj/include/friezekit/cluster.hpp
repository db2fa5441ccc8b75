#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "friezekit/combinat.hpp"

namespace friezekit {

// (k-1)(n-k-1) + n
std::size_t expected_cluster_size(int k, int n);

class Cluster {
 public:
  // Throws validation_failed on a crossing pair (with its witness) or a wrong count.
  static Cluster validated(int k, int n, std::vector<KSubset> members);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<KSubset>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const KSubset& s) const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend auto operator<=>(const Cluster& a, const Cluster& b) { return a.members_ <=> b.members_; }

 private:
  Cluster(int k, int n, std::vector<KSubset> members)
      : k_(k), n_(n), members_(std::move(members)) {}

  int k_ = 0;
  int n_ = 0;
  std::vector<KSubset> members_;  // lexicographically sorted
};

inline Cluster validate_cluster(int k, int n, std::vector<KSubset> members) {
  return Cluster::validated(k, n, std::move(members));
}

// The quadruple behind one exchange: J = I+{a,c} is replaced by I+{b,d}.
struct Exchange {
  KSubset removed;
  KSubset added;
  int a, b, c, d;
};

// Throws frozen_vertex, not_mutable or ambiguous.
Exchange find_exchange(const Cluster& c, const KSubset& j);
Cluster mutate_subset(const Cluster& c, const KSubset& j);
bool is_mutable(const Cluster& c, const KSubset& j);

enum class CliqueColor { white, black };

struct Clique {
  CliqueColor color = CliqueColor::white;
  KSubset defining_set;          // (k-1)-subset for white, (k+1)-subset for black
  std::vector<KSubset> members;  // ordered by added/removed element ascending
  std::vector<int> pivots;       // the added (white) or removed (black) element of each member

  bool has_interval_member() const;
};

std::vector<Clique> cliques(const Cluster& c);

struct Arrow {
  KSubset tail;
  KSubset head;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int k, int n, std::vector<KSubset> vertices, std::set<Arrow> arrows);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<KSubset>& vertices() const noexcept { return vertices_; }
  const std::set<Arrow>& arrows() const noexcept { return arrows_; }

  bool has_vertex(const KSubset& v) const;
  bool is_frozen(const KSubset& v) const { return is_interval(v); }
  bool has_arrow(const KSubset& tail, const KSubset& head) const;
  int in_degree(const KSubset& v) const;
  int out_degree(const KSubset& v) const;

  Quiver without_frozen_arrows() const;
  Quiver relabeled(const KSubset& from, const KSubset& to) const;

  // Loops, 2-cycles and arrows whose ends do not share k-1 elements.
  std::vector<std::string> invariant_violations() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<KSubset> vertices_;  // sorted
  std::set<Arrow> arrows_;
};

// Throws internal_inconsistency if two cliques orient one edge oppositely.
Quiver quiver_from_cluster(const Cluster& c);

// Three-step mutation at a quadrivalent mutable vertex; the result is a simple quiver.
Quiver fz_mutate_quiver(const Quiver& q, const KSubset& j);

bool is_rectangular(const Cluster& c);

enum class EdgeClass { horizontal, vertical, corner, internal, interval };

const char* to_string(EdgeClass e) noexcept;

EdgeClass classify_edge_subset(const Cluster& c, const KSubset& s);

// Non-interval members arranged in rows l = 1..k-1 (index l-1 in the result).
std::vector<std::vector<KSubset>> lattice_rows(const Cluster& c);

// Rows of the complement cluster.
std::vector<std::vector<KSubset>> lattice_columns(const Cluster& c);

Cluster complement_cluster(const Cluster& c);

// The four candidate members of the square around an internal clique of a
// rectangular cluster, in cyclic order; opposite corners sit two apart.
std::vector<KSubset> clique_square(const Clique& q);

KSubset opposite_in_square(const Cluster& c, const KSubset& s, const Clique& q);

struct PairCheck {
  KSubset first;
  KSubset second;
  bool first_in = false;
  bool second_in = false;
  bool ok() const { return first_in != second_in; }
};

struct PairingReport {
  KSubset subset;
  std::optional<PairCheck> grow_second;  // applies when the first block has >= 2 elements
  std::optional<PairCheck> grow_first;   // applies when the second block has >= 2 elements
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

PairingReport check_prop_pairing(const Cluster& c, const KSubset& s);

}  // namespace friezekit
