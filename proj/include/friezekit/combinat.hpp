#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace friezekit {

// Largest ambient size; subsets live in one 64-bit word.
inline constexpr int kMaxN = 63;

// Reduce any integer to the residue range 1..n.
constexpr int wrap(int x, int n) noexcept { return ((x - 1) % n + n) % n + 1; }

// Steps needed to walk clockwise from a to b (0 when equal).
constexpr int cyclic_distance(int a, int b, int n) noexcept { return ((b - a) % n + n) % n; }

// True iff a, b, c, d are distinct and appear in this order walking clockwise from a.
bool cyclically_ordered(int a, int b, int c, int d, int n) noexcept;

class KSubset {
 public:
  KSubset() = default;
  // Elements may be given in any order; repeats and out-of-range residues throw.
  KSubset(int n, std::initializer_list<int> elements);

  static KSubset from_elements(int n, std::span<const int> elements);
  static KSubset from_mask(int n, std::uint64_t mask);
  // Cyclic run of `length` residues starting at `start`.
  static KSubset interval(int n, int start, int length);

  int n() const noexcept { return n_; }
  int size() const noexcept;
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int residue) const noexcept;
  std::vector<int> elements() const;
  int min() const;

  KSubset with(int residue) const;
  KSubset without(int residue) const;

  // Plain concatenation for n <= 9 ("126"), dot separated above ("1.10.11").
  std::string label() const;

  friend bool operator==(const KSubset& a, const KSubset& b) noexcept {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  // Lexicographic on the sorted element lists.
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept;

 private:
  KSubset(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

struct SignedIndex {
  int sign = 0;
  std::optional<KSubset> canonical;
};

// Sign of the permutation sorting the tuple; zero on a repeated entry.
SignedIndex normalize_index(int n, std::span<const int> tuple);

// A maximal cyclic run of consecutive residues.
struct Run {
  int start = 1;
  int length = 0;

  int end(int n) const noexcept { return wrap(start + length - 1, n); }
  bool contains(int residue, int n) const noexcept {
    return cyclic_distance(start, residue, n) < length;
  }
  std::vector<int> elements(int n) const;

  friend bool operator==(const Run&, const Run&) = default;
};

// Maximal runs in clockwise order, starting with the run holding min(S).
std::vector<Run> cyclic_runs(const KSubset& s);

bool is_interval(const KSubset& s);

struct Blocks {
  Run first;   // holds the smallest element
  Run second;
};

// Throws degenerate_input on intervals; nullopt when there are three or more runs.
std::optional<Blocks> block_decomposition(const KSubset& s);

bool is_double_interval(const KSubset& s);

// Label with blocks separated by commas, each block read clockwise from its start
// ("912,7", "2,789"); intervals read clockwise from their start ("9123").
std::string block_label(const KSubset& s);

struct CrossingWitness {
  int s, t, u, v;  // s, u from the first subset; t, v from the second
};

std::optional<CrossingWitness> crossing_witness(const KSubset& a, const KSubset& b);
bool weakly_separated(const KSubset& a, const KSubset& b);

KSubset complement(const KSubset& s);

// All k-subsets of 1..n in lexicographic order.
std::vector<KSubset> all_subsets(int k, int n);

// Binomial coefficient, small arguments only.
std::uint64_t binomial(int n, int k);

}  // namespace friezekit

template <>
struct std::hash<friezekit::KSubset> {
  std::size_t operator()(const friezekit::KSubset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask() * 131u + static_cast<std::uint64_t>(s.n()));
  }
};
