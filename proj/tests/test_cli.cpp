#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  fs::path p(FK_WORK_DIR);
  fs::create_directories(p);
  return p;
}

Result run(const std::string& args) {
  const std::string cmd = std::string("\"") + FK_CLI_PATH + "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = work_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return "\"" + p.string() + "\"";
}

const char* kPentagon = "{\"k\":2,\"n\":5,\"subsets\":[[1,2],[2,3],[3,4],[4,5],[1,5],[1,4],[2,4]]}";

}  // namespace

TEST_CASE("snake cluster through to quiddities") {
  const auto snake = run("cluster snake -n 7");
  REQUIRE(snake.code == 0);
  const auto file = write_file("snake7.json", snake.out);
  CHECK(run("quiddity -i " + file + " --kind lower").out == "2 5 2 1 4 4 1\n");
  CHECK(run("quiddity -i " + file + " --kind upper").out == "1 4 4 1 2 5 2\n");
  CHECK(run("quiddity -i " + file + " --kind forwards").out == "2 5 2 1 4 4 1\n");
  CHECK(run("cluster check -i " + file).out.find("rectangular") != std::string::npos);
  CHECK(run("oracle check -i " + file).code == 0);

  const auto sl3 = run("frieze sl3 -i " + file + " --validate --json");
  CHECK(sl3.code == 0);
  CHECK(run("frieze check -i " + write_file("sl3.json", sl3.out)).code == 0);

  const auto table = run("pluecker solve -i " + file);
  REQUIRE(table.code == 0);
  CHECK(table.out.find("\"1,3,7\":4") != std::string::npos);
  CHECK(run("pluecker check -i " + write_file("table.json", table.out)).code == 0);

  const auto svg = run("tiling svg -i " + file + " --side upper");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("SL2 friezes") {
  const auto r = run("frieze sl2 --quiddity 3,1,3,1,3,1 --validate");
  CHECK(r.code == 0);
  CHECK(r.out.find("2 2 2") != std::string::npos);
  CHECK(run("frieze sl2 --quiddity 1,1,1,1").code == 1);
  CHECK(run("frieze sl2 --quiddity 3,x").code == 2);
  const auto json = run("frieze sl2 --quiddity 3,1,2,2,1 --json");
  CHECK(json.out == "{\"variant\":\"SL2\",\"n\":5,\"rows\":[[3,1,2,2,1],[2,1,3,1,2]]}\n");

  auto broken = json.out;
  broken.replace(broken.find("[2,1,3"), 6, "[2,1,4");
  CHECK(run("frieze check -i " + write_file("broken.json", broken)).code == 1);
}

TEST_CASE("mutation and quivers") {
  const auto file = write_file("pentagon.json", kPentagon);
  const auto m = run("cluster mutate -i " + file + " --at 2,4");
  CHECK(m.code == 0);
  CHECK(m.out.find("[1,3]") != std::string::npos);
  CHECK(run("cluster mutate -i " + write_file("pentagon_m.json", m.out) + " --at 1,3").out ==
        run("cluster mutate -i " + file + " --at 2,4 | \"" FK_CLI_PATH "\" cluster mutate -i - --at 1,3").out);
  CHECK(run("cluster mutate -i " + file + " --at 1,2").code == 2);

  const auto q = run("cluster quiver -i " + file);
  CHECK(q.code == 0);
  CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 12);
  CHECK(q.out.find("45 -> 1,4") != std::string::npos);
  const auto dot = run("cluster quiver -i " + file + " --dot");
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("oracles") {
  CHECK(run("oracle enumerate -k 3 -n 6").out == "k=3 n=6 clusters=34 rectangular=18\n");
  const auto e = run("oracle enumerate -k 2 -n 6 --json --clusters");
  CHECK(e.code == 0);
  CHECK(run("oracle check -i " + write_file("enum.json", e.out)).code == 0);
  CHECK(run("oracle gr2 -n 6").out == "n=6 triangulations=14 mismatches=0\n");
  CHECK(run("oracle gr2 -n 6 --corrupt").code == 1);
  CHECK(run("oracle enumerate -k 4 -n 10").code == 2);
}

TEST_CASE("errors and help") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code != 0);
  CHECK(run("cluster check -i /nonexistent/file.json").code == 2);
  CHECK(run("cluster check -i " + write_file("bad.json", "{nope")).code == 2);
  CHECK(run("cluster check -i " + write_file("cross.json",
                                             "{\"k\":2,\"n\":4,\"subsets\":[[1,2],[2,3],[3,4],[1,4],[1,3],[2,4]]}"))
            .code == 1);
}

TEST_CASE("output is byte-identical across runs") {
  const auto file = write_file("snake9.json", run("cluster snake -n 9").out);
  for (const std::string args : {"tiling svg -i " + file, "cluster quiver --dot -i " + file,
                                 "pluecker solve -i " + file, "frieze sl3 -i " + file}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const auto out = work_dir() / "written.svg";
  CHECK(run("tiling svg -i " + file + " -o \"" + out.string() + "\"").code == 0);
  std::ifstream in(out, std::ios::binary);
  const std::string written{std::istreambuf_iterator<char>(in), {}};
  CHECK(written == run("tiling svg -i " + file).out);
}
