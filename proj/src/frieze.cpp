#include "friezekit/frieze.hpp"

#include <algorithm>
#include <sstream>

#include "friezekit/error.hpp"

namespace friezekit {

const char* to_string(FriezeVariant v) noexcept { return v == FriezeVariant::sl2 ? "SL2" : "SL3"; }

int frieze_width(FriezeVariant v, int n) { return v == FriezeVariant::sl2 ? n - 3 : n - 4; }

Frieze::Frieze(FriezeVariant variant, int n, std::vector<std::vector<long long>> rows)
    : variant_(variant), n_(n), rows_(std::move(rows)) {
  if (n < 1 || n > kMaxN) fail(ErrorKind::invalid_input, "frieze period out of range");
  if (static_cast<int>(rows_.size()) != frieze_width(variant, n))
    fail(ErrorKind::invalid_input, std::string(to_string(variant)) + " frieze of period " +
                                       std::to_string(n) + " needs " +
                                       std::to_string(frieze_width(variant, n)) + " rows");
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::invalid_input, "every frieze row needs " + std::to_string(n) + " entries");
}

long long Frieze::at(int r, int i) const {
  const int w = width();
  if (r == -1 || r == w + 2) return 0;
  if (r == 0 || r == w + 1) return 1;
  if (r < -1 || r > w + 2) fail(ErrorKind::invalid_input, "row " + std::to_string(r) + " outside frieze");
  return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(wrap(i, n_) - 1)];
}

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::guard_exceeded, "frieze entry overflow");
  return out;
}

long long to_entry(const Rational& x, const KSubset& s) {
  if (denominator(x) != 1) fail(ErrorKind::non_integral, "p_{" + s.label() + "} is not an integer");
  const auto& num = numerator(x);
  if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min())
    fail(ErrorKind::guard_exceeded, "p_{" + s.label() + "} does not fit a machine integer");
  return static_cast<long long>(num);
}

std::string cell(int r, int i) {
  return "F(" + std::to_string(r) + "," + std::to_string(i) + ")";
}

}  // namespace

Frieze build_sl2_from_quiddity(const QuiddityVector& q) {
  const int n = q.n();
  if (n < 4) fail(ErrorKind::invalid_input, "quiddity sequence needs length >= 4");
  const int w = n - 3;
  // table[r + 1] is row r, for r = -1 .. n-1.
  std::vector<std::vector<long long>> table(static_cast<std::size_t>(n + 1),
                                            std::vector<long long>(static_cast<std::size_t>(n)));
  auto row = [&](int r) -> std::vector<long long>& { return table[static_cast<std::size_t>(r + 1)]; };
  std::fill(row(0).begin(), row(0).end(), 1);
  row(1) = q.values;
  for (int r = 1; r + 1 <= n - 1; ++r)
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto next = static_cast<std::size_t>((i + 1) % n);
      const long long num = checked_mul(row(r)[ui], row(r)[next]) - 1;
      const long long den = row(r - 1)[next];
      if (den == 0 || num % den != 0)
        fail(ErrorKind::non_integral, cell(r + 1, i + 1) + " is not an integer");
      row(r + 1)[ui] = num / den;
    }
  for (int r = 1; r <= w; ++r)
    for (int i = 0; i < n; ++i)
      if (row(r)[static_cast<std::size_t>(i)] <= 0)
        fail(ErrorKind::validation_failed, cell(r, i + 1) + " is not positive");
  for (int i = 0; i < n; ++i) {
    if (row(n - 2)[static_cast<std::size_t>(i)] != 1)
      fail(ErrorKind::validation_failed, "closing row of ones fails at column " + std::to_string(i + 1));
    if (row(n - 1)[static_cast<std::size_t>(i)] != 0)
      fail(ErrorKind::validation_failed, "closing row of zeros fails at column " + std::to_string(i + 1));
  }
  std::vector<std::vector<long long>> rows(table.begin() + 2, table.begin() + 2 + w);
  return Frieze(FriezeVariant::sl2, n, std::move(rows));
}

Frieze sl2_from_table(const PlueckerTable& t) {
  if (t.k() != 2) fail(ErrorKind::invalid_input, "SL2 frieze needs a k = 2 table");
  const int n = t.n();
  std::vector<std::vector<long long>> rows;
  for (int r = 1; r <= n - 3; ++r) {
    std::vector<long long> row;
    for (int i = 1; i <= n; ++i) {
      const auto s = KSubset(n, {wrap(i - 1, n), wrap(i + r, n)});
      row.push_back(to_entry(t.at(s), s));
    }
    rows.push_back(std::move(row));
  }
  return Frieze(FriezeVariant::sl2, n, std::move(rows));
}

Frieze sl3_from_table(const PlueckerTable& t) {
  if (t.k() != 3) fail(ErrorKind::invalid_input, "SL3 frieze needs a k = 3 table");
  const int n = t.n();
  std::vector<std::vector<long long>> rows;
  for (int r = 1; r <= n - 4; ++r) {
    std::vector<long long> row;
    for (int i = 1; i <= n; ++i) {
      const auto s = KSubset(n, {i, wrap(i + 1, n), wrap(i + r + 2, n)});
      row.push_back(to_entry(t.at(s), s));
    }
    rows.push_back(std::move(row));
  }
  return Frieze(FriezeVariant::sl3, n, std::move(rows));
}

Frieze build_sl3_from_cluster(const Cluster& c) {
  if (c.k() != 3) fail(ErrorKind::invalid_input, "SL3 frieze needs a k = 3 cluster");
  if (c.n() < 5) fail(ErrorKind::invalid_input, "SL3 frieze needs n >= 5");
  auto f = sl3_from_table(solve_from_cluster(c));
  const auto report = validate_sl3(f);
  if (!report.ok()) fail(ErrorKind::validation_failed, "frieze check failed: " + report.violations.front());
  return f;
}

namespace {

void check_positive(const Frieze& f, FriezeReport& report) {
  for (int r = 1; r <= f.width(); ++r)
    for (int i = 1; i <= f.n(); ++i) {
      ++report.checks;
      if (f.at(r, i) <= 0) report.violations.push_back(cell(r, i) + " is not positive");
    }
}

}  // namespace

FriezeReport validate_sl2(const Frieze& f) {
  FriezeReport report;
  if (f.variant() != FriezeVariant::sl2) {
    report.violations.push_back("not an SL2 frieze");
    return report;
  }
  check_positive(f, report);
  const int n = f.n();
  for (int r = 0; r <= f.width() + 1; ++r)
    for (int i = 1; i <= n; ++i) {
      ++report.checks;
      const long long d = checked_mul(f.at(r, i), f.at(r, i + 1)) -
                          checked_mul(f.at(r - 1, i + 1), f.at(r + 1, i));
      if (d != 1)
        report.violations.push_back("diamond at " + cell(r, i) + " has determinant " + std::to_string(d));
    }
  return report;
}

FriezeReport validate_sl3(const Frieze& f) {
  FriezeReport report;
  if (f.variant() != FriezeVariant::sl3) {
    report.violations.push_back("not an SL3 frieze");
    return report;
  }
  check_positive(f, report);
  const int n = f.n();
  for (int r = 1; r <= f.width(); ++r)
    for (int i = 1; i <= n; ++i) {
      ++report.checks;
      long long m[3][3];
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) m[s][t] = f.at(r + s - t, i + t);
      auto minor = [&](int a, int b, int c, int d) {
        return checked_mul(m[1][a], m[2][b]) - checked_mul(m[1][c], m[2][d]);
      };
      const long long det = checked_mul(m[0][0], minor(1, 2, 2, 1)) -
                            checked_mul(m[0][1], minor(0, 2, 2, 0)) +
                            checked_mul(m[0][2], minor(0, 1, 1, 0));
      if (det != 1)
        report.violations.push_back("window at " + cell(r, i) + " has determinant " + std::to_string(det));
    }
  return report;
}

FriezeReport validate(const Frieze& f) {
  return f.variant() == FriezeVariant::sl2 ? validate_sl2(f) : validate_sl3(f);
}

const char* to_string(QuiddityKind k) noexcept {
  switch (k) {
    case QuiddityKind::forwards: return "forwards";
    case QuiddityKind::reverse: return "reverse";
    case QuiddityKind::lower: return "lower";
    case QuiddityKind::upper: return "upper";
  }
  return "?";
}

QuiddityKind parse_quiddity_kind(std::string_view s) {
  if (s == "forwards") return QuiddityKind::forwards;
  if (s == "reverse") return QuiddityKind::reverse;
  if (s == "lower") return QuiddityKind::lower;
  if (s == "upper") return QuiddityKind::upper;
  fail(ErrorKind::invalid_input, "unknown quiddity kind '" + std::string(s) + "'");
}

QuiddityVector extract_quiddity(const Frieze& f, QuiddityKind kind) {
  if (f.variant() != FriezeVariant::sl3) fail(ErrorKind::invalid_input, "quiddity extraction needs an SL3 frieze");
  if (f.width() < 1) fail(ErrorKind::degenerate_input, "frieze has no non-trivial row");
  QuiddityVector q;
  for (int i = 1; i <= f.n(); ++i) {
    switch (kind) {
      case QuiddityKind::reverse: q.values.push_back(f.at(1, i - 2)); break;
      case QuiddityKind::forwards: q.values.push_back(f.at(f.width(), i + 1)); break;
      default: fail(ErrorKind::invalid_input, "frieze rows give forwards or reverse sequences only");
    }
  }
  return q;
}

QuiddityVector cluster_quiddity(const Cluster& c, QuiddityKind kind) {
  switch (kind) {
    case QuiddityKind::lower: return arc_quiddity(c, ArcSide::lower);
    case QuiddityKind::upper: return arc_quiddity(c, ArcSide::upper);
    default: return extract_quiddity(build_sl3_from_cluster(c), kind);
  }
}

std::string render(const Frieze& f) {
  const int w = f.width(), n = f.n();
  std::size_t digits = 1;
  for (const auto& row : f.rows())
    for (long long x : row) digits = std::max(digits, std::to_string(x).size());
  // Even cell width so a half-cell shift is a whole number of spaces.
  const std::size_t width = (digits + 2) / 2 * 2;
  std::ostringstream out;
  for (int r = 0; r <= w + 1; ++r) {
    std::string line(static_cast<std::size_t>(r) * width / 2, ' ');
    for (int i = 1; i <= n; ++i) {
      const auto text = std::to_string(f.at(r, i));
      line += std::string(width - text.size(), ' ') + text;
    }
    out << line << '\n';
  }
  return out.str();
}

Frieze parse_rendered(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail(ErrorKind::invalid_input, "'" + tok + "' is not an integer");
      row.push_back(v);
    }
    if (!row.empty()) lines.push_back(std::move(row));
  }
  if (lines.size() < 2) fail(ErrorKind::invalid_input, "a rendered frieze has at least two rows");
  const int n = static_cast<int>(lines.front().size());
  for (const auto& row : lines)
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::invalid_input, "ragged frieze rows");
  for (const auto* border : {&lines.front(), &lines.back()})
    if (std::any_of(border->begin(), border->end(), [](long long x) { return x != 1; }))
      fail(ErrorKind::invalid_input, "outer rows must be ones");
  const int rows = static_cast<int>(lines.size());
  FriezeVariant variant;
  if (rows == n - 1)
    variant = FriezeVariant::sl2;
  else if (rows == n - 2)
    variant = FriezeVariant::sl3;
  else
    fail(ErrorKind::invalid_input, std::to_string(rows) + " rows of period " + std::to_string(n) +
                                       " match neither SL2 nor SL3");
  std::vector<std::vector<long long>> inner(lines.begin() + 1, lines.end() - 1);
  return Frieze(variant, n, std::move(inner));
}

}  // namespace friezekit
