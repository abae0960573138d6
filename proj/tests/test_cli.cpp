#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "json.hpp"

#include "partsat/dimacs.hpp"
#include "partsat/generate.hpp"
#include "partsat/screen.hpp"

// End-to-end checks against the built binary (path in PARTSAT_BIN).

using namespace partsat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("PARTSAT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PARTSAT_BIN not set");
  return bin;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " \"" + binary() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() /
           ("partsat-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string write(const std::string& name, const std::string& content) const {
    fs::path file = path / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }
};

} // namespace

TEST_CASE("stats and sigma commands") {
  TempDir dir;
  std::string f3 = dir.write("F3.cnf", write_dimacs(fixture("F3")));

  RunResult stats = run("stats " + f3);
  CHECK(stats.code == 0);
  json st = json::parse(stats.out);
  CHECK(st["m"] == 8);
  CHECK(st["n"] == 8);
  CHECK(st["N"] == 24);

  RunResult sg = run("sigma " + f3 + " --assign=-1,-1,-1,-1,-1,-1,-1,-1");
  CHECK(sg.code == 0);
  json sv = json::parse(sg.out);
  CHECK(sv["sigma"] == 8);
  CHECK(sv["per_clause"] == json::array({1, 1, 1, 1, 1, 1, 1, 1}));

  RunResult extremes = run("sigma " + f3);
  json ev = json::parse(extremes.out);
  CHECK(ev["sigma_min"] == 8);
  CHECK(ev["sigma_max"] == 16);
  CHECK(ev["n_eq"] == 0);

  RunResult empty = run("stats " + dir.write("empty.cnf", "p cnf 3 0\n"));
  CHECK(json::parse(empty.out)["m"] == 0);

  RunResult human = run("stats " + f3 + " --human");
  CHECK(human.code == 0);
  CHECK(human.out.find("m: 8") != std::string::npos);

  RunResult cls = run("classify " + f3);
  CHECK(cls.code == 0);
  json cv = json::parse(cls.out);
  CHECK(cv["exact_k"] == 3);
  CHECK(cv["square"] == true);

  RunResult version = run("--version");
  CHECK(version.code == 0);
  CHECK(version.out.find("partsat") != std::string::npos);
}

TEST_CASE("decide command and exit codes") {
  TempDir dir;
  std::string ex6 = dir.write("example6.cnf", write_dimacs(fixture("example6")));
  std::string f1 = dir.write("F1.cnf", write_dimacs(fixture("F1")));

  RunResult yes = run("decide " + ex6 + " --one-in-k");
  CHECK(yes.code == 0);
  json d = json::parse(yes.out);
  CHECK(d["verdict"] == "yes");
  CHECK(d["witnesses"] == json::array({json::array({-1, 1, 1, -1, -1})}));
  CHECK(d["candidates_checked"] == 2);
  CHECK(d["n_eq"] == 1);

  RunResult no = run("decide " + f1 + " --mu=0,0,m,0");
  CHECK(no.code == 1);
  CHECK(json::parse(no.out)["reason"] == "all_candidates_fail");

  // target strictly between the extremes
  RunResult inapplicable = run("decide " + ex6 + " --mu=0,5,1,0,0");
  CHECK(inapplicable.code == 3);
  CHECK(json::parse(inapplicable.out)["verdict"] == "inapplicable");

  // bad partition sum is a usage error
  RunResult usage = run("decide " + ex6 + " --mu=0,5,0,0");
  CHECK(usage.code == 64);

  // missing partition option
  CHECK(run("decide " + ex6).code == 64);

  RunResult parse_fail = run("decide " + dir.write("bad.cnf", "p cnf x") +
                             " --one-in-k");
  CHECK(parse_fail.code == 2);
}

TEST_CASE("budget exceeded exits 4") {
  TempDir dir;
  // every variable balanced 2/2, so the achiever set is all 2^8 assignments
  std::vector<Clause> clauses;
  for (std::int32_t j = 0; j < 8; ++j) {
    Clause c;
    for (std::int32_t i = 0; i < 4; ++i) {
      std::int32_t v = (j + i) % 8 + 1;
      c.push_back(i < 2 ? v : -v);
    }
    clauses.push_back(c);
  }
  std::string path = dir.write("balanced.cnf", write_dimacs(Formula(8, clauses)));

  CHECK(run("decide " + path + " --mu=0,0,m,0,0", "PARTSAT_BUDGET=4").code == 4);
  CHECK(run("decide " + path + " --mu=0,0,m,0,0 --budget 4").code == 4);
  RunResult ok = run("decide " + path + " --mu=0,0,m,0,0");
  CHECK(json::parse(ok.out)["candidates_checked"] == 256);
}

TEST_CASE("oracle, nae and generation commands") {
  TempDir dir;
  std::string ex6 = dir.write("example6.cnf", write_dimacs(fixture("example6")));
  std::string f3 = dir.write("F3.cnf", write_dimacs(fixture("F3")));

  RunResult oracle = run("oracle " + ex6 + " --one-in-k");
  CHECK(oracle.code == 0);
  json ov = json::parse(oracle.out);
  CHECK(ov["witnesses"] == json::array({json::array({-1, 1, 1, -1, -1})}));
  CHECK(ov["enumerated"] == 32);

  CHECK(run("nae-check " + f3 + " --assign=all-false").code == 0);
  json nv = json::parse(run("nae-check " + f3 + " --assign=all-false").out);
  CHECK(nv["nae_condition"] == true);

  RunResult sweep = run("nae-sweep " + f3);
  CHECK(sweep.code == 0);
  CHECK(json::parse(sweep.out)["nae_satisfiable"] == true);

  RunResult gen = run("gen --square-mixed-read3 8 --seed 1");
  CHECK(gen.code == 0);
  CHECK(gen.out == write_dimacs(gen_square_mixed_read3(8, 1)));
  CHECK(run("gen --square-mixed-read3 8 --seed 1").out == gen.out);

  RunResult fx = run("gen --fixture F3");
  CHECK(fx.out == write_dimacs(fixture("F3")));

  RunResult dist = run("dist-check " + dir.write("sq.cnf", gen.out));
  CHECK(dist.code == 0);
  CHECK(dist.out.find("PASS") != std::string::npos);

  RunResult mu = run("mu-matrix " + f3);
  CHECK(mu.code == 0);
  CHECK(mu.out.rfind("s,t,value\n", 0) == 0);
}

TEST_CASE("screen command") {
  TempDir dir;
  dir.write("F1.cnf", write_dimacs(fixture("F1")));
  dir.write("F2.cnf", write_dimacs(fixture("F2")));
  dir.write("F3.cnf", write_dimacs(fixture("F3")));

  std::string base = "screen " + dir.path.string() + " --one-in-k --csv --no-times";
  RunResult serial = run(base + " --jobs 1");
  CHECK(serial.code == 0);
  RunResult parallel = run(base + " --jobs 4");
  CHECK(serial.out == parallel.out);

  // header + one row per file
  int lines = 0;
  for (char c : serial.out)
    lines += c == '\n';
  CHECK(lines == 4);
  CHECK(serial.out.find("F3.cnf") != std::string::npos);
  CHECK(serial.out.find(",yes,") != std::string::npos);

  RunResult js = run("screen " + dir.path.string() + " --one-in-k --jobs 2");
  json jv = json::parse(js.out);
  CHECK(jv["summary"]["total"] == 3);
  CHECK(jv["summary"]["at_min"] == 3);
  CHECK(jv["records"].size() == 3);

  // empty directory: header only
  TempDir empty;
  RunResult none = run("screen " + empty.path.string() + " --one-in-k --csv");
  CHECK(none.out == screen_csv_header());
}
