#include "friezekit/combinat.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "friezekit/error.hpp"

namespace friezekit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::validation_failed: return "validation-failed";
    case ErrorKind::frozen_vertex: return "frozen";
    case ErrorKind::not_mutable: return "not-mutable";
    case ErrorKind::ambiguous: return "ambiguous";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::saturation_stalled: return "saturation-stalled";
    case ErrorKind::non_integral: return "non-integral";
    case ErrorKind::guard_exceeded: return "guard-exceeded";
  }
  return "unknown";
}

namespace {

std::uint64_t bit(int residue) { return std::uint64_t{1} << (residue - 1); }

void check_n(int n) {
  if (n < 1 || n > kMaxN)
    fail(ErrorKind::invalid_input, "ambient size n=" + std::to_string(n) + " outside 1.." +
                                       std::to_string(kMaxN));
}

void check_residue(int r, int n) {
  if (r < 1 || r > n)
    fail(ErrorKind::invalid_input,
         "residue " + std::to_string(r) + " outside 1.." + std::to_string(n));
}

}  // namespace

bool cyclically_ordered(int a, int b, int c, int d, int n) noexcept {
  int db = cyclic_distance(a, b, n);
  int dc = cyclic_distance(a, c, n);
  int dd = cyclic_distance(a, d, n);
  return 0 < db && db < dc && dc < dd;
}

KSubset::KSubset(int n, std::initializer_list<int> elements)
    : KSubset(from_elements(n, std::span<const int>(elements.begin(), elements.size()))) {}

KSubset KSubset::from_elements(int n, std::span<const int> elements) {
  check_n(n);
  std::uint64_t mask = 0;
  for (int r : elements) {
    check_residue(r, n);
    if (mask & bit(r))
      fail(ErrorKind::invalid_input, "repeated residue " + std::to_string(r));
    mask |= bit(r);
  }
  return {n, mask};
}

KSubset KSubset::from_mask(int n, std::uint64_t mask) {
  check_n(n);
  if (n < 64 && (mask >> n) != 0) fail(ErrorKind::invalid_input, "mask has bits above n");
  return {n, mask};
}

KSubset KSubset::interval(int n, int start, int length) {
  check_n(n);
  if (length < 0 || length > n) fail(ErrorKind::invalid_input, "bad interval length");
  std::uint64_t mask = 0;
  for (int j = 0; j < length; ++j) mask |= bit(wrap(start + j, n));
  return {n, mask};
}

int KSubset::size() const noexcept { return std::popcount(mask_); }

bool KSubset::contains(int residue) const noexcept {
  return residue >= 1 && residue <= n_ && (mask_ & bit(residue));
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int KSubset::min() const {
  if (!mask_) fail(ErrorKind::degenerate_input, "empty subset has no minimum");
  return std::countr_zero(mask_) + 1;
}

KSubset KSubset::with(int residue) const {
  check_residue(residue, n_);
  return {n_, mask_ | bit(residue)};
}

KSubset KSubset::without(int residue) const {
  check_residue(residue, n_);
  return {n_, mask_ & ~bit(residue)};
}

std::string KSubset::label() const {
  std::string out;
  for (int r : elements()) {
    if (n_ > 9 && !out.empty()) out += '.';
    out += std::to_string(r);
  }
  return out;
}

std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) noexcept {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  std::uint64_t x = a.mask_, y = b.mask_;
  while (x && y) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex <=> ey;
    x &= x - 1;
    y &= y - 1;
  }
  return (x != 0) <=> (y != 0);
}

SignedIndex normalize_index(int n, std::span<const int> tuple) {
  check_n(n);
  if (tuple.empty()) fail(ErrorKind::invalid_input, "empty index tuple");
  for (int r : tuple) check_residue(r, n);
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return {};
      if (tuple[i] > tuple[j]) ++inversions;
    }
  return {inversions % 2 ? -1 : 1, KSubset::from_elements(n, tuple)};
}

std::vector<int> Run::elements(int n) const {
  std::vector<int> out;
  for (int j = 0; j < length; ++j) out.push_back(wrap(start + j, n));
  return out;
}

std::vector<Run> cyclic_runs(const KSubset& s) {
  const int n = s.n();
  std::vector<Run> runs;
  if (s.size() == 0) return runs;
  if (s.size() == n) return {Run{1, n}};
  for (int r : s.elements()) {
    if (s.contains(wrap(r - 1, n))) continue;
    int len = 1;
    while (s.contains(wrap(r + len, n))) ++len;
    runs.push_back({r, len});
  }
  // Starts come out ascending; rotate so the run holding min(S) leads.
  const int lo = s.min();
  auto it = std::find_if(runs.begin(), runs.end(), [&](const Run& run) { return run.contains(lo, n); });
  std::rotate(runs.begin(), it, runs.end());
  return runs;
}

bool is_interval(const KSubset& s) { return cyclic_runs(s).size() <= 1; }

std::optional<Blocks> block_decomposition(const KSubset& s) {
  auto runs = cyclic_runs(s);
  if (runs.size() <= 1)
    fail(ErrorKind::degenerate_input, "{" + s.label() + "} is an interval, it has no block pair");
  if (runs.size() > 2) return std::nullopt;
  return Blocks{runs[0], runs[1]};
}

bool is_double_interval(const KSubset& s) { return cyclic_runs(s).size() == 2; }

std::string block_label(const KSubset& s) {
  const int n = s.n();
  std::string out;
  bool first_block = true;
  for (const Run& run : cyclic_runs(s)) {
    if (!first_block) out += ',';
    first_block = false;
    bool first = true;
    for (int r : run.elements(n)) {
      if (n > 9 && !first) out += '.';
      first = false;
      out += std::to_string(r);
    }
  }
  return out;
}

std::optional<CrossingWitness> crossing_witness(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "subsets over different ambient sizes");
  if (a.size() != b.size()) fail(ErrorKind::invalid_input, "subsets of different sizes");
  const int n = a.n();
  const auto only_a = KSubset::from_mask(n, a.mask() & ~b.mask()).elements();
  const auto only_b = KSubset::from_mask(n, b.mask() & ~a.mask()).elements();
  for (int s : only_a)
    for (int u : only_a)
      for (int t : only_b)
        for (int v : only_b)
          if (cyclically_ordered(s, t, u, v, n)) return CrossingWitness{s, t, u, v};
  return std::nullopt;
}

bool weakly_separated(const KSubset& a, const KSubset& b) { return !crossing_witness(a, b); }

KSubset complement(const KSubset& s) {
  const int n = s.n();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return KSubset::from_mask(n, full & ~s.mask());
}

std::vector<KSubset> all_subsets(int k, int n) {
  check_n(n);
  std::vector<KSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(KSubset::from_elements(n, idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace friezekit
