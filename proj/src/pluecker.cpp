#include "friezekit/pluecker.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "friezekit/error.hpp"

namespace friezekit {

PlueckerTable::PlueckerTable(int k, int n) : k_(k), n_(n) {
  if (n < 2 || n > kMaxN || k < 1 || k >= n)
    fail(ErrorKind::invalid_input, "table needs 1 <= k < n");
}

std::optional<Rational> PlueckerTable::get(const KSubset& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

const Rational& PlueckerTable::at(const KSubset& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) fail(ErrorKind::invalid_input, "no value for p_{" + s.label() + "}");
  return it->second;
}

void PlueckerTable::set(const KSubset& s, Rational v) {
  if (s.n() != n_ || s.size() != k_)
    fail(ErrorKind::invalid_input, "{" + s.label() + "} does not index this table");
  values_[s] = std::move(v);
}

bool PlueckerTable::complete() const { return values_.size() == binomial(n_, k_); }

Rational PlueckerTable::signed_value(std::span<const int> tuple) const {
  const auto idx = normalize_index(n_, tuple);
  if (idx.sign == 0) return 0;
  return idx.sign * at(*idx.canonical);
}

namespace {

// One instance of p(ac)p(bd) = p(ab)p(cd) + p(ad)p(bc): slot order ac, bd, ab, cd, ad, bc.
struct ShortRelation {
  std::array<std::size_t, 6> slot;
  KSubset core;
  std::array<int, 4> abcd;
};

struct Indexed {
  std::vector<KSubset> subsets;
  std::unordered_map<KSubset, std::size_t> position;
  std::vector<ShortRelation> relations;
};

Indexed index_relations(int k, int n) {
  Indexed ix;
  ix.subsets = all_subsets(k, n);
  for (std::size_t i = 0; i < ix.subsets.size(); ++i) ix.position[ix.subsets[i]] = i;
  if (k < 2) return ix;
  for (const auto& core : all_subsets(k - 2, n)) {
    std::vector<int> free;
    for (int x = 1; x <= n; ++x)
      if (!core.contains(x)) free.push_back(x);
    const std::size_t m = free.size();
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q)
        for (std::size_t r = q + 1; r < m; ++r)
          for (std::size_t s = r + 1; s < m; ++s) {
            const int a = free[p], b = free[q], c = free[r], d = free[s];
            auto at = [&](int x, int y) { return ix.position.at(core.with(x).with(y)); };
            ix.relations.push_back(
                {{at(a, c), at(b, d), at(a, b), at(c, d), at(a, d), at(b, c)}, core, {a, b, c, d}});
          }
  }
  return ix;
}

std::string describe(const ShortRelation& rel) {
  std::string s = "I={" + rel.core.label() + "} abcd=";
  for (int x : rel.abcd) s += std::to_string(x) + (x == rel.abcd[3] ? "" : ",");
  return s;
}

}  // namespace

PlueckerTable solve_from_cluster(const Cluster& c, ScanOrder order) {
  const int k = c.k(), n = c.n();
  if (k != 2 && k != 3) fail(ErrorKind::invalid_input, "solver handles k = 2 and k = 3 only");
  auto ix = index_relations(k, n);
  if (order == ScanOrder::reverse) std::reverse(ix.relations.begin(), ix.relations.end());

  std::vector<std::optional<Rational>> val(ix.subsets.size());
  for (const auto& s : c.members()) val[ix.position.at(s)] = Rational(1);

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& rel : ix.relations) {
      int unknown = -1, count = 0;
      for (int j = 0; j < 6; ++j)
        if (!val[rel.slot[static_cast<std::size_t>(j)]]) {
          unknown = j;
          ++count;
        }
      if (count != 1) continue;
      auto v = [&](int j) -> const Rational& { return *val[rel.slot[static_cast<std::size_t>(j)]]; };
      // Partner of each slot inside its product.
      static constexpr std::array<int, 6> partner{1, 0, 3, 2, 5, 4};
      const int mate = partner[static_cast<std::size_t>(unknown)];
      if (v(mate) == 0) continue;
      Rational x;
      if (unknown < 2) {
        x = (v(2) * v(3) + v(4) * v(5)) / v(mate);
      } else {
        const int other = unknown < 4 ? 4 : 2;
        x = (v(0) * v(1) - v(other) * v(other + 1)) / v(mate);
      }
      val[rel.slot[static_cast<std::size_t>(unknown)]] = std::move(x);
      progress = true;
    }
  }

  std::string missing;
  for (std::size_t i = 0; i < val.size(); ++i)
    if (!val[i]) missing += (missing.empty() ? "" : " ") + ix.subsets[i].label();
  if (!missing.empty()) fail(ErrorKind::saturation_stalled, "no value reached for: " + missing);

  PlueckerTable t(k, n);
  for (std::size_t i = 0; i < val.size(); ++i) {
    const Rational& x = *val[i];
    if (denominator(x) != 1)
      fail(ErrorKind::non_integral, "p_{" + ix.subsets[i].label() + "} = " + x.str() + " is not an integer");
    if (x <= 0)
      fail(ErrorKind::non_integral, "p_{" + ix.subsets[i].label() + "} = " + x.str() + " is not positive");
    t.set(ix.subsets[i], x);
  }
  return t;
}

RelationReport check_short_relations(const PlueckerTable& t) {
  if (!t.complete()) fail(ErrorKind::invalid_input, "relation check needs a complete table");
  const auto ix = index_relations(t.k(), t.n());
  RelationReport report;
  for (const auto& rel : ix.relations) {
    auto v = [&](int j) -> const Rational& {
      return t.at(ix.subsets[rel.slot[static_cast<std::size_t>(j)]]);
    };
    ++report.instances;
    Rational lhs = v(0) * v(1);
    Rational rhs = v(2) * v(3) + v(4) * v(5);
    if (lhs != rhs) report.violations.push_back({describe(rel), lhs, rhs});
  }
  return report;
}

RelationReport check_long_relations(const PlueckerTable& t, LongRelationSign sign) {
  if (!t.complete()) fail(ErrorKind::invalid_input, "relation check needs a complete table");
  const int k = t.k(), n = t.n();
  RelationReport report;
  if (k + 1 > n) return report;
  for (const auto& small : all_subsets(k - 1, n))
    for (const auto& big : all_subsets(k + 1, n)) {
      const auto head = small.elements();
      const auto js = big.elements();
      Rational sum = 0;
      for (std::size_t r = 0; r < js.size(); ++r) {
        std::vector<int> tuple = head;
        tuple.push_back(js[r]);
        const int s = sign == LongRelationSign::alternating ? (r % 2 ? -1 : 1) : (n % 2 ? -1 : 1);
        sum += s * t.signed_value(tuple) * t.at(big.without(js[r]));
      }
      ++report.instances;
      if (sum != 0)
        report.violations.push_back({"I={" + small.label() + "} J={" + big.label() + "}", sum, 0});
    }
  return report;
}

}  // namespace friezekit
