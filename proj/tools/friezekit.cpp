// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "friezekit/friezekit.h"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail_with(fk_status s) {
  std::cerr << "error: " << fk_status_name(s) << ": " << fk_last_error() << "\n";
  switch (s) {
    case FK_ERR_VALIDATION:
    case FK_ERR_AMBIGUOUS:
    case FK_ERR_INCONSISTENT:
    case FK_ERR_STALLED:
    case FK_ERR_NON_INTEGRAL:
      return kInvalid;
    default:
      return kUsage;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

// Owns a string handed out by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { fk_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct ClusterHandle {
  fk_cluster* p = nullptr;
  ~ClusterHandle() { fk_cluster_free(p); }
};

struct FriezeHandle {
  fk_frieze* p = nullptr;
  ~FriezeHandle() { fk_frieze_free(p); }
};

struct EnumerationHandle {
  fk_enumeration* p = nullptr;
  ~EnumerationHandle() { fk_enumeration_free(p); }
};

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::string digest_of(const std::string& bytes) {
  LibString hex;
  if (fk_digest(bytes.data(), bytes.size(), &hex.p) != FK_OK) return "unknown";
  return hex.str();
}

struct Options {
  std::string input;
  std::string output;
  std::string at;
  std::string side = "lower";
  std::string kind = "lower";
  std::string quiddity;
  int k = 3;
  int n = 0;
  bool dot = false;
  bool json = false;
  bool validate = false;
  bool with_clusters = false;
  bool corrupt = false;
};

#define FK_TRY(expr)                    \
  do {                                  \
    const fk_status fk_s_ = (expr);     \
    if (fk_s_ != FK_OK) return fail_with(fk_s_); \
  } while (0)

int load_cluster(const Options& o, ClusterHandle& c) {
  const auto text = read_input(o.input);
  FK_TRY(fk_cluster_from_json(text.c_str(), &c.p));
  return kOk;
}

int cmd_cluster_snake(const Options& o) {
  if (o.k != 3) {
    std::cerr << "error: the snake construction is defined for k = 3\n";
    return kUsage;
  }
  ClusterHandle c;
  FK_TRY(fk_cluster_quadrilateral(o.n, &c.p));
  LibString out;
  FK_TRY(fk_cluster_to_json(c.p, &out.p));
  write_output(o.output, out.str());
  return kOk;
}

int cmd_cluster_mutate(const Options& o) {
  ClusterHandle c;
  if (int rc = load_cluster(o, c)) return rc;
  std::vector<int> at;
  for (long long v : parse_list(o.at)) at.push_back(static_cast<int>(v));
  ClusterHandle next;
  FK_TRY(fk_cluster_mutate(c.p, at.data(), at.size(), &next.p));
  LibString out;
  FK_TRY(fk_cluster_to_json(next.p, &out.p));
  write_output(o.output, out.str());
  return kOk;
}

int cmd_cluster_check(const Options& o) {
  ClusterHandle c;
  if (int rc = load_cluster(o, c)) return rc;
  int rect = 0;
  FK_TRY(fk_cluster_is_rectangular(c.p, &rect));
  std::cout << "valid cluster: k=" << fk_cluster_k(c.p) << " n=" << fk_cluster_n(c.p)
            << " members=" << fk_cluster_size(c.p) << (rect ? " rectangular" : "") << "\n";
  return kOk;
}

int cmd_cluster_quiver(const Options& o) {
  const auto text = read_input(o.input);
  ClusterHandle c;
  FK_TRY(fk_cluster_from_json(text.c_str(), &c.p));
  LibString dot;
  FK_TRY(fk_cluster_quiver_dot(c.p, digest_of(text).c_str(), &dot.p));
  if (o.dot) {
    write_output(o.output, dot.str());
    return kOk;
  }
  // Plain listing: one "tail -> head" line per arrow, taken from the DOT edges.
  std::stringstream in(dot.str());
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("->") == std::string::npos) continue;
    std::string cleaned;
    for (char ch : line)
      if (ch != '"' && ch != ';') cleaned += ch;
    out += cleaned.substr(cleaned.find_first_not_of(' ')) + "\n";
  }
  write_output(o.output, out);
  return kOk;
}

int cmd_tiling_svg(const Options& o) {
  const auto text = read_input(o.input);
  ClusterHandle c;
  FK_TRY(fk_cluster_from_json(text.c_str(), &c.p));
  LibString svg;
  FK_TRY(fk_cluster_tiling_svg(c.p, o.side == "upper" ? FK_UPPER : FK_LOWER, digest_of(text).c_str(), &svg.p));
  write_output(o.output, svg.str());
  return kOk;
}

int cmd_quiddity(const Options& o) {
  ClusterHandle c;
  if (int rc = load_cluster(o, c)) return rc;
  std::vector<long long> values(static_cast<std::size_t>(fk_cluster_n(c.p)));
  std::size_t len = 0;
  FK_TRY(fk_cluster_quiddity(c.p, o.kind.c_str(), values.data(), values.size(), &len));
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out += (i ? " " : "") + std::to_string(values[i]);
  write_output(o.output, out + "\n");
  return kOk;
}

int emit_frieze(const Options& o, const FriezeHandle& f) {
  LibString text;
  if (o.json)
    FK_TRY(fk_frieze_to_json(f.p, &text.p));
  else
    FK_TRY(fk_frieze_render(f.p, &text.p));
  std::string out = text.str();
  int rc = kOk;
  if (o.validate) {
    LibString report;
    int ok = 0;
    FK_TRY(fk_frieze_validate(f.p, &report.p, &ok));
    std::cerr << "validation: " << report.str();
    rc = ok ? kOk : kInvalid;
  }
  write_output(o.output, out);
  return rc;
}

int cmd_frieze_sl2(const Options& o) {
  const auto q = parse_list(o.quiddity);
  FriezeHandle f;
  FK_TRY(fk_frieze_sl2_from_quiddity(q.data(), q.size(), &f.p));
  return emit_frieze(o, f);
}

int cmd_frieze_sl3(const Options& o) {
  ClusterHandle c;
  if (int rc = load_cluster(o, c)) return rc;
  FriezeHandle f;
  FK_TRY(fk_frieze_sl3_from_cluster(c.p, &f.p));
  return emit_frieze(o, f);
}

int cmd_frieze_check(const Options& o) {
  const auto text = read_input(o.input);
  FriezeHandle f;
  FK_TRY(fk_frieze_from_json(text.c_str(), &f.p));
  LibString report;
  int ok = 0;
  FK_TRY(fk_frieze_validate(f.p, &report.p, &ok));
  std::cout << report.str();
  return ok ? kOk : kInvalid;
}

int cmd_pluecker_solve(const Options& o) {
  ClusterHandle c;
  if (int rc = load_cluster(o, c)) return rc;
  LibString table;
  FK_TRY(fk_pluecker_solve_json(c.p, &table.p));
  write_output(o.output, table.str());
  return kOk;
}

int cmd_pluecker_check(const Options& o) {
  const auto text = read_input(o.input);
  LibString report;
  int ok = 0;
  FK_TRY(fk_pluecker_check_json(text.c_str(), &report.p, &ok));
  std::cout << report.str();
  return ok ? kOk : kInvalid;
}

int cmd_oracle_enumerate(const Options& o) {
  EnumerationHandle e;
  FK_TRY(fk_enumerate(o.k, o.n, &e.p));
  if (o.json) {
    LibString out;
    FK_TRY(fk_enumeration_to_json(e.p, o.with_clusters ? 1 : 0, &out.p));
    write_output(o.output, out.str());
  } else {
    write_output(o.output, "k=" + std::to_string(o.k) + " n=" + std::to_string(o.n) +
                               " clusters=" + std::to_string(fk_enumeration_count(e.p)) +
                               " rectangular=" + std::to_string(fk_enumeration_rectangular_count(e.p)) + "\n");
  }
  return kOk;
}

int cmd_oracle_check(const Options& o) {
  const auto text = read_input(o.input);
  LibString report;
  int ok = 0;
  FK_TRY(fk_check_json(text.c_str(), &report.p, &ok));
  std::cout << report.str();
  return ok ? kOk : kInvalid;
}

int cmd_oracle_gr2(const Options& o) {
  std::size_t total = 0, bad = 0;
  FK_TRY(fk_cross_validate_gr2(o.n, o.corrupt ? 1 : 0, &total, &bad));
  std::cout << "n=" << o.n << " triangulations=" << total << " mismatches=" << bad << "\n";
  return bad ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "friezekit: clusters of Pluecker coordinates, quivers, superimposed triangulations and frieze patterns.\n"
      "Formats: cluster JSON {\"k\":3,\"n\":7,\"subsets\":[[1,2,3],...]}; table JSON {\"k\",\"n\",\"values\":{\"1,2,6\":1,...}};\n"
      "frieze JSON {\"variant\":\"SL3\",\"n\":7,\"rows\":[[...],...]} listing rows 1..width.\n"
      "Use '-' as a file name for standard input or output. Exit codes: 0 ok, 1 validation failure, 2 usage/input error."};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto input = [&](CLI::App* cmd) { cmd->add_option("-i,--input", o.input, "input JSON file")->required(); };
  auto output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", o.output, "output file (default stdout)"); };
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
    cmd->callback([&, fn] { action = [&o, fn] { return fn(o); }; });
  };

  auto* cluster = app.add_subcommand("cluster", "generate, mutate and inspect clusters");
  cluster->require_subcommand(1);
  auto* snake = cluster->add_subcommand("snake", "quadrilateral cluster built from the snake triangulation");
  snake->add_option("-k", o.k, "subset size (3)")->check(CLI::Range(1, 62));
  snake->add_option("-n", o.n, "polygon size")->required();
  output(snake);
  bind(snake, cmd_cluster_snake);
  auto* mutate = cluster->add_subcommand("mutate", "exchange one member");
  input(mutate);
  mutate->add_option("--at", o.at, "member to exchange, e.g. 2,4")->required();
  output(mutate);
  bind(mutate, cmd_cluster_mutate);
  auto* check = cluster->add_subcommand("check", "validate a cluster (separation and member count)");
  input(check);
  bind(check, cmd_cluster_check);
  auto* quiver = cluster->add_subcommand("quiver", "quiver of a cluster");
  input(quiver);
  quiver->add_flag("--dot", o.dot, "Graphviz output");
  output(quiver);
  bind(quiver, cmd_cluster_quiver);

  auto* tiling = app.add_subcommand("tiling", "superimposed triangulations");
  tiling->require_subcommand(1);
  auto* svg = tiling->add_subcommand("svg", "draw the lower or upper arcs of a rectangular cluster");
  input(svg);
  svg->add_option("--side", o.side, "lower or upper")->check(CLI::IsMember({"lower", "upper"}));
  output(svg);
  bind(svg, cmd_tiling_svg);

  auto* quid = app.add_subcommand("quiddity", "quiddity sequence of a k = 3 cluster");
  input(quid);
  quid->add_option("--kind", o.kind, "lower, upper, forwards or reverse")
      ->check(CLI::IsMember({"lower", "upper", "forwards", "reverse"}));
  output(quid);
  bind(quid, cmd_quiddity);

  auto* frieze = app.add_subcommand("frieze", "build and check frieze patterns");
  frieze->require_subcommand(1);
  auto* sl2 = frieze->add_subcommand("sl2", "Coxeter frieze grown from a quiddity sequence");
  sl2->add_option("--quiddity", o.quiddity, "comma separated, e.g. 3,1,2,2,1")->required();
  sl2->add_flag("--validate", o.validate, "check every diamond; exit 1 on a violation");
  sl2->add_flag("--json", o.json, "frieze JSON instead of text");
  output(sl2);
  bind(sl2, cmd_frieze_sl2);
  auto* sl3 = frieze->add_subcommand("sl3", "SL3 frieze of a k = 3 cluster");
  input(sl3);
  sl3->add_flag("--validate", o.validate, "check every 3x3 window; exit 1 on a violation");
  sl3->add_flag("--json", o.json, "frieze JSON instead of text");
  output(sl3);
  bind(sl3, cmd_frieze_sl3);
  auto* fcheck = frieze->add_subcommand("check", "validate a frieze JSON document");
  input(fcheck);
  bind(fcheck, cmd_frieze_check);

  auto* pluecker = app.add_subcommand("pluecker", "Pluecker coordinates of a cluster point");
  pluecker->require_subcommand(1);
  auto* solve = pluecker->add_subcommand("solve", "set members to 1 and solve the three-term relations");
  input(solve);
  output(solve);
  bind(solve, cmd_pluecker_solve);
  auto* pcheck = pluecker->add_subcommand("check", "evaluate all three-term and alternating relations");
  input(pcheck);
  bind(pcheck, cmd_pluecker_check);

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration and checks");
  oracle->require_subcommand(1);
  auto* en = oracle->add_subcommand("enumerate", "all clusters reachable by mutation");
  en->add_option("-k", o.k, "subset size")->required();
  en->add_option("-n", o.n, "ambient size")->required();
  en->add_flag("--json", o.json, "JSON report");
  en->add_flag("--clusters", o.with_clusters, "list every cluster in the JSON report");
  output(en);
  bind(en, cmd_oracle_enumerate);
  auto* ocheck = oracle->add_subcommand("check", "maximality scan, quiver, pairing and tiling checks");
  input(ocheck);
  bind(ocheck, cmd_oracle_check);
  auto* gr2 = oracle->add_subcommand("gr2", "compare solver and Coxeter friezes over all triangulations");
  gr2->add_option("-n", o.n, "polygon size (5..9)")->required();
  gr2->add_flag("--corrupt", o.corrupt, "bump one triangle count (negative control)");
  bind(gr2, cmd_oracle_gr2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
