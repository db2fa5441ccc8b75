#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/geometry.hpp"
#include "friezekit/pluecker.hpp"

namespace friezekit {

enum class FriezeVariant { sl2, sl3 };

const char* to_string(FriezeVariant v) noexcept;

// Integer frieze stored by its non-trivial rows. Row r (1..width) holds F(r, 1..n);
// rows 0 and width+1 are ones, rows -1 and width+2 are zeros.
class Frieze {
 public:
  Frieze(FriezeVariant variant, int n, std::vector<std::vector<long long>> rows);

  FriezeVariant variant() const noexcept { return variant_; }
  int n() const noexcept { return n_; }
  int width() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<long long>>& rows() const noexcept { return rows_; }

  // Any row from -1 to width+2; the column index is taken mod n.
  long long at(int r, int i) const;

  friend bool operator==(const Frieze&, const Frieze&) = default;

 private:
  FriezeVariant variant_;
  int n_;
  std::vector<std::vector<long long>> rows_;
};

// Width n-3 for SL2 and n-4 for SL3.
int frieze_width(FriezeVariant v, int n);

Frieze build_sl2_from_quiddity(const QuiddityVector& q);

// Entry (r, i) = p{i-1, i+r}, so row 1 holds p{i-1, i+1}.
Frieze sl2_from_table(const PlueckerTable& t);

// Entry (r, i) = p{i, i+1, i+r+2}.
Frieze sl3_from_table(const PlueckerTable& t);
Frieze build_sl3_from_cluster(const Cluster& c);

struct FriezeReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

FriezeReport validate_sl2(const Frieze& f);
FriezeReport validate_sl3(const Frieze& f);
FriezeReport validate(const Frieze& f);

enum class QuiddityKind { forwards, reverse, lower, upper };

const char* to_string(QuiddityKind k) noexcept;
QuiddityKind parse_quiddity_kind(std::string_view s);

// reverse[i] = F(1, i-2), forwards[i] = F(width, i+1); SL3 only.
QuiddityVector extract_quiddity(const Frieze& f, QuiddityKind kind);

// Quiddity of a k = 3 cluster by any of the four readings.
QuiddityVector cluster_quiddity(const Cluster& c, QuiddityKind kind);

// Rows 0..width+1 top to bottom, row r indented by r half cells.
std::string render(const Frieze& f);
// Inverse of render; the variant follows from the row count.
Frieze parse_rendered(std::string_view text);

}  // namespace friezekit
