#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(XORKNESER_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("xorkneser_cli_" + name)).string();
}

std::size_t member_lines(const std::string &family_text) {
  std::size_t lines = 0;
  for (char c : family_text)
    lines += c == '\n';
  return lines - 1; // header
}

} // namespace

TEST_CASE("construct examples") {
  CHECK(member_lines(run("construct f2 --n 8 --k 2").out) == 8);
  CHECK(member_lines(run("construct plane --q 3").out) == 9);
  CHECK(member_lines(run("construct matrix --n 4 --k 2 --t 2").out) == 4);
  CHECK(member_lines(run("construct core --ell 5 --n 5").out) >= 14);
}

TEST_CASE("construct then verify, rank and peel") {
  const std::string plane = temp_path("plane.txt");
  CHECK(run("construct plane --q 3 --out " + plane).code == 0);
  const Run v = run("verify --in " + plane);
  CHECK(v.code == 0);
  CHECK(v.out == "valid size 9\n");
  const Run r = run("rank --in " + plane);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rank 12 required 12 holds yes", 0) == 0);

  const std::string f2 = temp_path("f2.json");
  CHECK(run("construct f2 --n 40 --k 2 --format json --out " + f2).code == 0);
  CHECK(run("verify --in " + f2).code == 0);
  const Run p = run("peel --in " + f2 + " --format json --samples 2000 --seed 3");
  CHECK(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["schema"] == 1);
  CHECK(j["partition_ok"] == true);
  CHECK(j["matching"]["valid"] == true);
  CHECK(j["permutation_types"]["doubly_typed"] == 0);
  CHECK(run("peel --in " + f2 + " --samples 2000 --seed 3").out ==
        run("peel --in " + f2 + " --samples 2000 --seed 3").out);
  CHECK(run("rank --in " + f2).code == 2);

  std::filesystem::remove(plane);
  std::filesystem::remove(f2);
}

TEST_CASE("verify reports a violation with exit 1") {
  const std::string bad = temp_path("bad.txt");
  {
    std::ofstream out(bad);
    out << "2 3 1\n0 3\n1 4\n";
  }
  const Run v = run("verify --in " + bad);
  CHECK(v.code == 1);
  CHECK(v.out.find("members 0 and 1") != std::string::npos);
  {
    std::ofstream out(bad);
    out << "2 3 1\n0 3\nx 4\n";
  }
  CHECK(run("verify --in " + bad).code == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("solve") {
  const Run s = run("solve --n 3 --k 1 --ell 4");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("9 exact\n", 0) == 0);
  CHECK(run("solve --n 3 --k 1 --ell 4 --threads 3").out == s.out);

  const Run j = run("solve --n 3 --k 1 --ell 4 --format json");
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["size"] == 9);
  CHECK(parsed["exact"] == true);
  CHECK(parsed["witness_sets"].size() == 9);

  CHECK(run("solve --n 6 --k 2 --ell 2 --budget 1").code == 3);
  CHECK(run("XORKNESER_BUDGET=1 " + std::string(XORKNESER_CLI) + " --help >/dev/null; true").code == 0);
  CHECK(run("solve --n 10 --k 3 --ell 3 --vertex-budget 1000").code == 3);
}

TEST_CASE("budget from the environment") {
  const std::string cmd = "XORKNESER_BUDGET=1 " + std::string(XORKNESER_CLI) +
                          " solve --n 6 --k 2 --ell 2 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("table") {
  const Run t = run("table --ell 2 --k 1..2 --n 2..8");
  CHECK(t.code == 0);
  CHECK(t.out.rfind("ell,n,k,lower_construction,exact_or_lb,upper_formula,tight\n", 0) == 0);
  std::size_t rows = 0;
  for (char c : t.out)
    rows += c == '\n';
  CHECK(rows == 1 + 7 + 7);
  CHECK(t.out.find("2,6,2,") != std::string::npos);
}

TEST_CASE("export-dimacs") {
  const Run d = run("export-dimacs --n 3 --k 1 --ell 2");
  CHECK(d.code == 0);
  CHECK(d.out.rfind("p edge 9 ", 0) == 0);
  const std::string path = temp_path("g.dimacs");
  {
    std::ofstream out(path);
    out << d.out;
  }
  CHECK(run("solve --in " + path).out.rfind("3 exact\n", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("construct bogus").code == 2);
  CHECK(run("construct f2 --n 7 --k 2").code == 2);
  CHECK(run("construct plane --q 4").code == 2);
  CHECK(run("construct matrix --n 4 --k 2 --t 1").code == 2);
  CHECK(run("table --ell 2 --k 1 --n 5..2").code == 2);
  CHECK(run("verify --in /nonexistent/file").code == 2);
  CHECK(run("solve --n 3 --k 1 --ell 2 --format xml").code == 2);
}
