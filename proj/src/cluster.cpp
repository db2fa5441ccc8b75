#include "friezekit/cluster.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "friezekit/error.hpp"

namespace friezekit {

std::size_t expected_cluster_size(int k, int n) {
  return static_cast<std::size_t>((k - 1) * (n - k - 1) + n);
}

Cluster Cluster::validated(int k, int n, std::vector<KSubset> members) {
  if (n < 2 || n > kMaxN || k < 1 || k >= n)
    fail(ErrorKind::invalid_input, "need 1 <= k < n <= " + std::to_string(kMaxN) + ", got k=" +
                                       std::to_string(k) + " n=" + std::to_string(n));
  for (const auto& s : members)
    if (s.n() != n || s.size() != k)
      fail(ErrorKind::invalid_input,
           "{" + s.label() + "} is not a " + std::to_string(k) + "-subset of 1.." + std::to_string(n));
  std::sort(members.begin(), members.end());
  if (auto dup = std::adjacent_find(members.begin(), members.end()); dup != members.end())
    fail(ErrorKind::invalid_input, "member {" + dup->label() + "} listed twice");

  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (auto w = crossing_witness(members[i], members[j]))
        fail(ErrorKind::validation_failed,
             "{" + members[i].label() + "} and {" + members[j].label() + "} cross: " +
                 std::to_string(w->s) + "<" + std::to_string(w->t) + "<" + std::to_string(w->u) +
                 "<" + std::to_string(w->v));

  const auto want = expected_cluster_size(k, n);
  if (members.size() != want)
    fail(ErrorKind::validation_failed, "collection has " + std::to_string(members.size()) +
                                           " members, a cluster needs " + std::to_string(want));
  for (int start = 1; start <= n; ++start) {
    auto iv = KSubset::interval(n, start, k);
    if (!std::binary_search(members.begin(), members.end(), iv))
      fail(ErrorKind::validation_failed, "interval {" + iv.label() + "} missing");
  }
  return Cluster(k, n, std::move(members));
}

bool Cluster::contains(const KSubset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

namespace {

// Subsets of `from` of the given size, as masks.
std::vector<std::uint64_t> sub_masks(std::uint64_t from, int size) {
  std::vector<int> bits;
  for (std::uint64_t m = from; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  std::vector<std::uint64_t> out;
  const int total = static_cast<int>(bits.size());
  if (size < 0 || size > total) return out;
  std::vector<bool> pick(static_cast<std::size_t>(total), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::uint64_t m = 0;
    for (int i = 0; i < total; ++i)
      if (pick[static_cast<std::size_t>(i)]) m |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
    out.push_back(m);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool strictly_between(int a, int x, int b, int n) {
  int dx = cyclic_distance(a, x, n);
  return 0 < dx && dx < cyclic_distance(a, b, n);
}

}  // namespace

Exchange find_exchange(const Cluster& c, const KSubset& j) {
  const int n = c.n();
  if (!c.contains(j)) fail(ErrorKind::invalid_input, "{" + j.label() + "} is not a cluster member");
  if (is_interval(j)) fail(ErrorKind::frozen_vertex, "{" + j.label() + "} is an interval (frozen)");

  std::optional<Exchange> found;
  for (std::uint64_t core : sub_masks(j.mask(), c.k() - 2)) {
    const auto ac = KSubset::from_mask(n, j.mask() & ~core).elements();
    const int a = ac[0], cc = ac[1];
    const auto base = KSubset::from_mask(n, core);
    for (int b = 1; b <= n; ++b) {
      if (j.contains(b) || !strictly_between(a, b, cc, n)) continue;
      for (int d = 1; d <= n; ++d) {
        if (j.contains(d) || !strictly_between(cc, d, a, n)) continue;
        auto pair = [&](int x, int y) { return base.with(x).with(y); };
        if (!c.contains(pair(a, b)) || !c.contains(pair(cc, d)) || !c.contains(pair(a, d)) ||
            !c.contains(pair(b, cc)))
          continue;
        Exchange e{j, pair(b, d), a, b, cc, d};
        if (found && found->added != e.added)
          fail(ErrorKind::ambiguous, "{" + j.label() + "} admits replacements {" +
                                         found->added.label() + "} and {" + e.added.label() + "}");
        if (!found) found = e;
      }
    }
  }
  if (!found) fail(ErrorKind::not_mutable, "no exchange quadruple for {" + j.label() + "}");
  return *found;
}

Cluster mutate_subset(const Cluster& c, const KSubset& j) {
  const auto e = find_exchange(c, j);
  auto members = c.members();
  std::replace(members.begin(), members.end(), e.removed, e.added);
  return Cluster::validated(c.k(), c.n(), std::move(members));
}

bool is_mutable(const Cluster& c, const KSubset& j) {
  try {
    find_exchange(c, j);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ambiguous) throw;
    return false;
  }
}

bool Clique::has_interval_member() const {
  return std::any_of(members.begin(), members.end(), [](const KSubset& s) { return is_interval(s); });
}

std::vector<Clique> cliques(const Cluster& c) {
  const int n = c.n();
  std::vector<Clique> out;
  // Collect candidate defining sets from the members themselves.
  std::map<KSubset, std::vector<int>> white, black;
  for (const auto& s : c.members())
    for (int x : s.elements()) white[s.without(x)].push_back(x);
  for (const auto& s : c.members())
    for (int x = 1; x <= n; ++x)
      if (!s.contains(x)) black[s.with(x)].push_back(x);

  for (auto& [def, pivots] : white) {
    if (pivots.size() < 3) continue;
    std::sort(pivots.begin(), pivots.end());
    Clique q{CliqueColor::white, def, {}, pivots};
    for (int x : pivots) q.members.push_back(def.with(x));
    out.push_back(std::move(q));
  }
  for (auto& [def, pivots] : black) {
    if (pivots.size() < 3) continue;
    std::sort(pivots.begin(), pivots.end());
    Clique q{CliqueColor::black, def, {}, pivots};
    for (int x : pivots) q.members.push_back(def.without(x));
    out.push_back(std::move(q));
  }
  return out;
}

Quiver::Quiver(int k, int n, std::vector<KSubset> vertices, std::set<Arrow> arrows)
    : k_(k), n_(n), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (const auto& a : arrows_)
    if (!has_vertex(a.tail) || !has_vertex(a.head))
      fail(ErrorKind::invalid_input, "arrow " + a.tail.label() + "->" + a.head.label() +
                                         " leaves the vertex set");
}

bool Quiver::has_vertex(const KSubset& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Quiver::has_arrow(const KSubset& tail, const KSubset& head) const {
  return arrows_.count(Arrow{tail, head}) > 0;
}

int Quiver::in_degree(const KSubset& v) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.head == v; }));
}

int Quiver::out_degree(const KSubset& v) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.tail == v; }));
}

Quiver Quiver::without_frozen_arrows() const {
  std::set<Arrow> kept;
  for (const auto& a : arrows_)
    if (!(is_frozen(a.tail) && is_frozen(a.head))) kept.insert(a);
  return Quiver(k_, n_, vertices_, std::move(kept));
}

Quiver Quiver::relabeled(const KSubset& from, const KSubset& to) const {
  auto swap = [&](const KSubset& v) { return v == from ? to : v; };
  std::vector<KSubset> verts;
  for (const auto& v : vertices_) verts.push_back(swap(v));
  std::set<Arrow> arrows;
  for (const auto& a : arrows_) arrows.insert({swap(a.tail), swap(a.head)});
  return Quiver(k_, n_, std::move(verts), std::move(arrows));
}

std::vector<std::string> Quiver::invariant_violations() const {
  std::vector<std::string> out;
  for (const auto& a : arrows_) {
    const std::string name = a.tail.label() + "->" + a.head.label();
    if (a.tail == a.head) out.push_back("loop at " + a.tail.label());
    if (a.tail < a.head && has_arrow(a.head, a.tail)) out.push_back("2-cycle " + name);
    if (std::popcount(a.tail.mask() & a.head.mask()) != k_ - 1)
      out.push_back("arrow " + name + " joins subsets not sharing k-1 elements");
  }
  return out;
}

Quiver quiver_from_cluster(const Cluster& c) {
  std::set<Arrow> arrows;
  auto add = [&](const KSubset& t, const KSubset& h) {
    if (arrows.count(Arrow{h, t}))
      fail(ErrorKind::internal_inconsistency,
           "cliques orient " + t.label() + "-" + h.label() + " both ways");
    arrows.insert(Arrow{t, h});
  };
  for (const auto& q : cliques(c)) {
    const std::size_t m = q.members.size();
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cur = q.members[j];
      const auto& next = q.members[(j + 1) % m];
      if (q.color == CliqueColor::white)
        add(cur, next);
      else
        add(next, cur);
    }
  }
  return Quiver(c.k(), c.n(), c.members(), std::move(arrows));
}

Quiver fz_mutate_quiver(const Quiver& q, const KSubset& j) {
  if (!q.has_vertex(j)) fail(ErrorKind::invalid_input, j.label() + " is not a quiver vertex");
  if (q.is_frozen(j)) fail(ErrorKind::frozen_vertex, j.label() + " is frozen");
  if (q.in_degree(j) != 2 || q.out_degree(j) != 2)
    fail(ErrorKind::not_mutable, j.label() + " does not have two incoming and two outgoing arrows");

  std::map<std::pair<KSubset, KSubset>, int> mult;
  std::vector<KSubset> ins, outs;
  for (const auto& a : q.arrows()) {
    ++mult[{a.tail, a.head}];
    if (a.head == j) ins.push_back(a.tail);
    if (a.tail == j) outs.push_back(a.head);
  }
  for (const auto& i : ins)
    for (const auto& k : outs) ++mult[{i, k}];

  std::map<std::pair<KSubset, KSubset>, int> turned;
  for (const auto& [e, m] : mult) {
    if (e.first == j || e.second == j)
      turned[{e.second, e.first}] += m;
    else
      turned[e] += m;
  }

  std::set<Arrow> arrows;
  for (const auto& [e, m] : turned) {
    auto back = turned.find({e.second, e.first});
    const int net = m - (back == turned.end() ? 0 : back->second);
    if (net > 0) arrows.insert(Arrow{e.first, e.second});
  }
  return Quiver(q.k(), q.n(), q.vertices(), std::move(arrows));
}

bool is_rectangular(const Cluster& c) {
  return std::all_of(c.members().begin(), c.members().end(),
                     [](const KSubset& s) { return cyclic_runs(s).size() <= 2; });
}

const char* to_string(EdgeClass e) noexcept {
  switch (e) {
    case EdgeClass::horizontal: return "horizontal";
    case EdgeClass::vertical: return "vertical";
    case EdgeClass::corner: return "corner";
    case EdgeClass::internal: return "internal";
    case EdgeClass::interval: return "interval";
  }
  return "?";
}

namespace {

void require_rectangular(const Cluster& c) {
  if (!is_rectangular(c)) fail(ErrorKind::invalid_input, "cluster is not rectangular");
}

KSubset from_runs(int n, const std::vector<std::pair<int, int>>& runs) {
  std::uint64_t mask = 0;
  for (auto [start, len] : runs) mask |= KSubset::interval(n, start, len).mask();
  return KSubset::from_mask(n, mask);
}

}  // namespace

EdgeClass classify_edge_subset(const Cluster& c, const KSubset& s) {
  if (!c.contains(s)) fail(ErrorKind::invalid_input, "{" + s.label() + "} is not a cluster member");
  if (is_interval(s)) return EdgeClass::interval;
  const auto blocks = block_decomposition(s);
  if (!blocks) fail(ErrorKind::invalid_input, "{" + s.label() + "} is not a double interval");
  const int n = c.n(), k = c.k();
  const bool horizontal = blocks->first.length == k - 1 || blocks->second.length == k - 1;
  const int gap = cyclic_distance(blocks->first.end(n), blocks->second.start, n) - 1;
  const bool vertical = gap == 1 || (n - k - gap) == 1;
  if (horizontal && vertical) return EdgeClass::corner;
  if (horizontal) return EdgeClass::horizontal;
  if (vertical) return EdgeClass::vertical;
  return EdgeClass::internal;
}

namespace {

// S and T share k-1 elements, share one block, and the other block moved by one step.
bool translate_adjacent(const KSubset& s, const KSubset& t) {
  const int n = s.n();
  if (std::popcount(s.mask() & t.mask()) != s.size() - 1) return false;
  auto bs = cyclic_runs(s), bt = cyclic_runs(t);
  if (bs.size() != 2 || bt.size() != 2) return false;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      if (!(bs[x] == bt[y])) continue;
      const Run& ys = bs[1 - x];
      const Run& yt = bt[1 - y];
      if (ys.length == yt.length &&
          (wrap(ys.start + 1, n) == yt.start || wrap(yt.start + 1, n) == ys.start))
        return true;
    }
  return false;
}

// Order one component along its translation path, starting at the smaller end.
std::vector<KSubset> chain_order(std::vector<KSubset> comp) {
  std::sort(comp.begin(), comp.end());
  const std::size_t m = comp.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (translate_adjacent(comp[i], comp[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  if (m <= 1) return comp;
  std::size_t ends = 0;
  for (const auto& a : adj) {
    if (a.size() > 2) return comp;
    ends += a.size() == 1;
  }
  if (ends != 2) return comp;
  std::size_t cur = 0;
  while (adj[cur].size() != 1) ++cur;
  std::vector<KSubset> out{comp[cur]};
  std::size_t prev = m;
  while (out.size() < m) {
    std::size_t next = adj[cur][0] == prev ? adj[cur].back() : adj[cur][0];
    prev = cur;
    cur = next;
    out.push_back(comp[cur]);
  }
  return out;
}

int min_rule_row(const KSubset& s) { return block_decomposition(s)->second.length; }

}  // namespace

std::vector<std::vector<KSubset>> lattice_rows(const Cluster& c) {
  require_rectangular(c);
  const int k = c.k(), n = c.n();
  std::vector<KSubset> inner;
  for (const auto& s : c.members())
    if (!is_interval(s)) inner.push_back(s);
  if (k < 2) return {};
  if (k == 2) return {chain_order(inner)};

  // Connected components under translation adjacency.
  std::vector<std::size_t> parent(inner.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j)
      if (translate_adjacent(inner[i], inner[j])) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<KSubset>> groups;
  for (std::size_t i = 0; i < inner.size(); ++i) groups[find(i)].push_back(inner[i]);
  std::vector<std::vector<KSubset>> comps;
  for (auto& [root, g] : groups) comps.push_back(chain_order(std::move(g)));
  std::sort(comps.begin(), comps.end());

  const auto rows_wanted = static_cast<std::size_t>(k - 1);
  const auto row_len = static_cast<std::size_t>(n - k - 1);
  if (comps.size() != rows_wanted ||
      std::any_of(comps.begin(), comps.end(), [&](const auto& g) { return g.size() != row_len; }))
    fail(ErrorKind::validation_failed, "non-interval members do not split into " +
                                           std::to_string(k - 1) + " rows of " +
                                           std::to_string(n - k - 1));

  // Each component holds one block-size pair {a, k-a}; it may sit in row a or row k-a.
  std::vector<std::array<int, 2>> options;
  for (const auto& g : comps) {
    const auto b = block_decomposition(g.front());
    options.push_back({b->first.length, b->second.length});
  }
  auto linked = [](const std::vector<KSubset>& x, const std::vector<KSubset>& y) {
    for (const auto& s : x)
      for (const auto& t : y)
        if (std::popcount(s.mask() & t.mask()) == s.size() - 1) return true;
    return false;
  };

  const std::size_t m = comps.size();
  std::vector<int> best;
  int best_score = -1;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
    std::vector<int> row(m);
    std::vector<int> seen(static_cast<std::size_t>(k), -1);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      row[i] = options[i][(choice >> i) & 1];
      if (seen[static_cast<std::size_t>(row[i])] >= 0) ok = false;
      seen[static_cast<std::size_t>(row[i])] = static_cast<int>(i);
    }
    if (!ok) continue;
    for (int l = 1; l + 1 <= k - 1 && ok; ++l)
      ok = linked(comps[static_cast<std::size_t>(seen[static_cast<std::size_t>(l)])],
                  comps[static_cast<std::size_t>(seen[static_cast<std::size_t>(l + 1)])]);
    if (!ok) continue;
    int score = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& s : comps[i]) score += min_rule_row(s) == row[i];
    if (score > best_score) {
      best_score = score;
      best = row;
    }
  }
  if (best.empty()) fail(ErrorKind::validation_failed, "no consistent row assignment");

  std::vector<std::vector<KSubset>> rows(rows_wanted);
  for (std::size_t i = 0; i < m; ++i) rows[static_cast<std::size_t>(best[i] - 1)] = comps[i];
  return rows;
}

Cluster complement_cluster(const Cluster& c) {
  std::vector<KSubset> members;
  for (const auto& s : c.members()) members.push_back(complement(s));
  return Cluster::validated(c.n() - c.k(), c.n(), std::move(members));
}

std::vector<std::vector<KSubset>> lattice_columns(const Cluster& c) {
  return lattice_rows(complement_cluster(c));
}

std::vector<KSubset> clique_square(const Clique& q) {
  const KSubset& def = q.defining_set;
  const int n = def.n();
  auto runs = cyclic_runs(def);
  if (runs.size() != 2)
    fail(ErrorKind::degenerate_input, "defining set {" + def.label() + "} is not a double interval");
  const Run& a = runs[0];
  const Run& b = runs[1];
  if (q.color == CliqueColor::white)
    return {def.with(wrap(a.start - 1, n)), def.with(wrap(a.end(n) + 1, n)),
            def.with(wrap(b.start - 1, n)), def.with(wrap(b.end(n) + 1, n))};
  return {def.without(a.start), def.without(a.end(n)), def.without(b.start), def.without(b.end(n))};
}

KSubset opposite_in_square(const Cluster& c, const KSubset& s, const Clique& q) {
  (void)c;
  if (q.has_interval_member())
    fail(ErrorKind::invalid_input, "clique at {" + q.defining_set.label() + "} is on the boundary");
  const auto square = clique_square(q);
  std::optional<KSubset> found;
  for (std::size_t i = 0; i < 4; ++i) {
    if (square[i] != s) continue;
    const auto& opp = square[(i + 2) % 4];
    if (found && *found != opp)
      fail(ErrorKind::degenerate_input, "square around {" + q.defining_set.label() +
                                            "} is degenerate at {" + s.label() + "}");
    found = opp;
  }
  if (!found)
    fail(ErrorKind::invalid_input, "{" + s.label() + "} is not in the square of {" +
                                       q.defining_set.label() + "}");
  return *found;
}

PairingReport check_prop_pairing(const Cluster& c, const KSubset& s) {
  const int n = c.n();
  PairingReport report{s, std::nullopt, std::nullopt, {}};
  if (is_interval(s)) {
    report.violations.push_back("{" + s.label() + "} is an interval");
    return report;
  }
  const auto blocks = block_decomposition(s);
  if (!blocks) {
    report.violations.push_back("{" + s.label() + "} is not a double interval");
    return report;
  }
  const Run x = blocks->first, y = blocks->second;
  auto make = [&](KSubset first, KSubset second) {
    return PairCheck{first, second, c.contains(first), c.contains(second)};
  };
  auto note = [&](const PairCheck& p, const char* which) {
    if (!p.ok())
      report.violations.push_back(std::string(which) + ": {" + p.first.label() + "} " +
                                  (p.first_in ? "in" : "out") + ", {" + p.second.label() + "} " +
                                  (p.second_in ? "in" : "out"));
  };
  if (x.length >= 2) {
    report.grow_second = make(from_runs(n, {{x.start, x.length - 1}, {y.start - 1, y.length + 1}}),
                              from_runs(n, {{x.start + 1, x.length - 1}, {y.start, y.length + 1}}));
    note(*report.grow_second, "shrink first block");
  }
  if (y.length >= 2) {
    report.grow_first = make(from_runs(n, {{x.start - 1, x.length + 1}, {y.start, y.length - 1}}),
                             from_runs(n, {{x.start, x.length + 1}, {y.start + 1, y.length - 1}}));
    note(*report.grow_first, "shrink second block");
  }
  return report;
}

}  // namespace friezekit
