#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NETGAME_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("netgame_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("moments --exact on a two-edge path") {
  auto path = write_file("p3.txt", "0 1\n1 2\n");
  auto r = run("moments " + path + " --exact");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["walk_counts_match"] == true);
  CHECK(j["walk_counts"] == j["walk_counts_direct"]);
  CHECK(j["m2"].get<double>() == doctest::Approx(4.0 / 3));
}

TEST_CASE("bounds on a 5-cycle") {
  auto path = write_file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  for (const char* method : {"analytic", "bisect"}) {
    auto r = run("bounds " + path + " --order 2 --method " + method);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["alpha"].get<double>() + 1.6180339887498949) < 1e-6);
    CHECK(std::abs(j["beta"].get<double>() - 2.0) < 1e-6);
    CHECK(j["s"] == 2);
  }
}

TEST_CASE("equilibria on a single edge") {
  auto path = write_file("edge.txt", "a b\n");
  auto r = run("equilibria " + path + " --delta 1.5");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["equilibria"].size() == 3);
  CHECK(j["status"] == "Inconclusive");
}

TEST_CASE("census, sample, dynamics, sensitivity, generate") {
  auto gpath = (scratch() / "gen.txt").string();
  REQUIRE(run("generate --family erdos-renyi --n 40 --p 0.2 --seed 3 -o " + gpath).code == 0);
  auto c = run("census " + gpath + " --per-node");
  REQUIRE(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["n"] == 40);
  CHECK(j.contains("triangles_per_node"));

  auto s = run("sample " + gpath + " --seed-node 0 --radius 1");
  CHECK(s.code == 0);
  CHECK(s.out.find("0 ") != std::string::npos);

  auto d = run("dynamics " + gpath + " --delta 0.1 --x0 0.5");
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("step,residual,x_", 0) == 0);

  auto sens = run("sensitivity " + gpath + " --property e --step 0.01");
  CHECK(sens.code == 0);
}

TEST_CASE("exit codes") {
  auto good = write_file("ok.txt", "0 1\n");
  CHECK(run("").code == 2);
  CHECK(run("bounds " + good + " --order 3").code == 2);
  CHECK(run("equilibria " + good).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("census " + (scratch() / "missing.txt").string()).code == 3);
  auto bad = write_file("bad.txt", "0 1\nlonely\n");
  CHECK(run("census " + bad).code == 3);
  CHECK(run("equilibria " + good + " --delta -1").code == 3);
  CHECK(run("sample " + good + " --seed-node nope").code == 3);
  auto big = write_file("ring.txt", [] {
    std::string t;
    for (int i = 0; i < 30; ++i) t += std::to_string(i) + " " + std::to_string((i + 1) % 30) + "\n";
    return t;
  }());
  CHECK(run("equilibria " + big + " --delta 0.2").code == 3);
}

TEST_CASE("experiment is byte-identical across runs") {
  auto gpath = (scratch() / "social.txt").string();
  REQUIRE(run("generate --family social-mix --n 2000 --seed 5 -o " + gpath).code == 0);
  auto a = (scratch() / "a.csv").string(), b = (scratch() / "b.csv").string();
  REQUIRE(run("experiment " + gpath + " --num-subgraphs 20 --rng-seed 7 --out " + a).code == 0);
  REQUIRE(run("experiment " + gpath + " --num-subgraphs 20 --rng-seed 7 --threads 2 --out " + b).code == 0);
  const auto ta = slurp(a), tb = slurp(b);
  CHECK(!ta.empty());
  CHECK(ta == tb);
  auto k1 = run("experiment " + gpath + " --num-subgraphs 1 --radius 0");
  REQUIRE(k1.code == 0);
  CHECK(k1.out.find("\n0,") != std::string::npos);
  CHECK(run("experiment " + gpath + " --num-subgraphs 5000").code == 3);
  fs::remove_all(scratch());
}
