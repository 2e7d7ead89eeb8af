#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef DOMGAME_CLI
#error "DOMGAME_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DOMGAME_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "domgame_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("solve a clique inline") {
  const Run r = run("solve --graph g6:C~");
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["schema"] == 1);
  CHECK(j["value"] == 1);
  CHECK(j["optimal_first_moves"] == nlohmann::json::array({0}));
  CHECK(j.contains("stats"));
}

TEST_CASE("generate T(1) then solve both variants") {
  const Run fam = run("family T --r 1 --emit edges");
  REQUIRE(fam.code == 0);
  CHECK(fam.out.rfind("6 5\n", 0) == 0);
  CHECK(fam.out.find("# labels {") != std::string::npos);
  const auto file = scratch("t1.txt");
  write(file, fam.out);
  CHECK(json_of(run("solve --graph " + file.string()))["value"] == 3);
  CHECK(json_of(run("solve --graph " + file.string() + " --variant staller"))["value"] == 4);
}

TEST_CASE("verify thm2 at order 7") {
  const Run r = run("verify --suite thm2 --n-max 7 --seed 1");
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["name"] == "thm2");
  CHECK(j["suites"][0]["checked"] == 996);
}

TEST_CASE("partial fixture through a file") {
  const Run fam = run("family F --emit edges");
  REQUIRE(fam.code == 0);
  CHECK(fam.out.find("# dominated ") != std::string::npos);
  const auto file = scratch("f.txt");
  write(file, fam.out);
  CHECK(json_of(run("solve --graph " + file.string()))["value"] == 5);
  CHECK(json_of(run("solve --graph " + file.string() + " --variant staller"))["value"] == 5);
}

TEST_CASE("dominated flag and optimal line") {
  // P3 with v1 dominated
  const Run r = run("solve --graph g6:Bg --dominated 0 --line");
  REQUIRE(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["value"] == 1);
  REQUIRE(j["line"].size() == 1);
  CHECK(j["line"][0]["player"] == "dominator");
  CHECK(j["line"][0]["newly_dominated"] == 2);
  const auto s = json_of(run("solve --graph g6:Bg --dominated 0 --variant staller --exact-front"));
  CHECK(s["value"] == 2);
}

TEST_CASE("root split agrees") {
  const Run fam = run("family T_prime --r 2");
  const std::string g6 = fam.out.substr(0, fam.out.find('\n'));
  CHECK(json_of(run("solve --graph 'g6:" + g6 + "' --root-split 3"))["value"] ==
        json_of(run("solve --graph 'g6:" + g6 + "'"))["value"]);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("solve").code == 2);
  CHECK(run("solve --graph g6:C~~").code == 2);
  CHECK(run("solve --graph g6:C~ --dominated 7").code == 2);
  CHECK(run("solve --graph /nonexistent/file").code == 2);
  CHECK(run("family nope").code == 2);
  CHECK(run("family T --r 0").code == 2);
  CHECK(run("verify --suite nope --n-max 3 --seed 1").code == 2);
  CHECK(run("census --max-n 17").code == 3);
  CHECK(run("spanning --graph g6:C~ --cap 3").code == 3);
  CHECK(run("spanning").code == 2);

  const auto bad = scratch("loop.txt");
  write(bad, "3 3\n0 1\n1 2\n2 2\n");
  CHECK(run("solve --graph " + bad.string()).code == 2);
}

TEST_CASE("memo cap environment variable") {
  const Run fam = run("family T --r 2");
  const std::string g6 = fam.out.substr(0, fam.out.find('\n'));
  const std::string cmd = "env DOMGAME_MEMO_CAP=4 " + std::string(DOMGAME_CLI) + " solve --graph 'g6:" + g6 +
                          "' >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
  const std::string bad = "env DOMGAME_MEMO_CAP=x " + std::string(DOMGAME_CLI) + " solve --graph g6:C~ >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == 2);
}

TEST_CASE("census output is byte identical across job counts") {
  const Run a = run("census --max-n 10 --jobs 1");
  const Run b = run("census --max-n 10 --jobs 8");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("{\"n\":1,\"gg\":1,\"ggp\":1,\"count\":1,\"witnesses\":[\"@\"]}\n", 0) == 0);
}

TEST_CASE("census files and resume") {
  const auto out = scratch("census.jsonl");
  std::filesystem::remove(out);
  const Run first = run("census --max-n 6 --out " + out.string());
  REQUIRE(first.code == 0);
  CHECK(json_of(first)["computed"].size() == 6);
  CHECK(std::filesystem::exists(out.string() + ".manifest"));
  const Run again = run("census --max-n 8 --out " + out.string() + " --resume");
  CHECK(json_of(again)["skipped"].size() == 6);
  CHECK(json_of(again)["computed"] == nlohmann::json::array({7, 8}));
  std::ifstream in(out);
  std::string text{std::istreambuf_iterator<char>(in), {}};
  CHECK(text == run("census --max-n 8").out);
}

TEST_CASE("census over a graph6 stream") {
  const auto file = scratch("stream.g6");
  write(file, "C~\nCr\n\nBg\n");
  const Run r = run("census --input " + file.string());
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}

TEST_CASE("spanning reports") {
  const auto k4 = json_of(run("spanning --graph g6:C~"));
  CHECK(k4["tree_count"] == 16);
  CHECK(k4["schema"] == 1);
  const Run fig = run("spanning --pair-family fig6");
  REQUIRE(fig.code == 0);
  const auto j = json_of(fig);
  CHECK(j["G"]["gamma_g"] == 4);
  CHECK(j["H"]["gamma_g"] == 3);
  CHECK(j["spanning"]["min_tree"]["value"] == 3);
  CHECK(j["prop9"]["ok"] == true);
  const auto big = json_of(run("spanning --pair-family layered3conn --m 3"));
  CHECK(big["spanning"].is_null());
  CHECK(big["H"]["gamma_g"] == 3);
}

TEST_CASE("family output formats") {
  const Run g6 = run("family houses --t 2 --which H");
  CHECK(g6.code == 0);
  const Run edges = run("family houses --t 2 --which H --emit edges");
  CHECK(edges.out.rfind("9 10\n", 0) == 0);
  CHECK(run("family web --k 1").out == run("family web --k 1").out);
}

TEST_CASE("verify output is reproducible") {
  const std::string args = "verify --suite thm1,cp,lemma3,residual,oracle --n-max 5 --seed 9 --samples 20 "
                           "--random-graphs 10";
  const Run a = run(args), b = run(args), c = run(args + " --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}
