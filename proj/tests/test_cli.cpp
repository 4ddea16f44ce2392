#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "gausslink/cli.hpp"

using namespace gausslink;

namespace {

struct run {
  int exit_code;
  std::string out, err;
};

run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/gausslink_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("examples subcommand lists fixtures") {
  run r = cli({"examples"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("hopf") != std::string::npos);
  CHECK(r.out.find("borromean") != std::string::npos);
}

TEST_CASE("every run is stamped with version, command, config, seed") {
  run r = cli({"generate", "--conway", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# gausslink 1.0.0\n") == 0);
  CHECK(r.out.find("# command: generate") != std::string::npos);
  CHECK(r.out.find("# seed: 1") != std::string::npos);
  CHECK(r.out.find("# terms: 1") != std::string::npos);
  CHECK(r.out.find("1 loop;t1 h2 h1 t2") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"generate", "--milnor", "4"},
        std::vector<std::string>{"geometry", "--polylink", "hopf:n=60"}}) {
    run a = cli(args);
    run b = cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("generate needs exactly one family") {
  CHECK(cli({"generate"}).exit_code == 2);
  CHECK(cli({"generate", "--conway", "1", "--milnor", "3"}).exit_code == 2);
  CHECK(cli({"generate", "--conway", "0"}).exit_code != 0);
}

TEST_CASE("JSON envelope carries the same result") {
  run r = cli({"generate", "--milnor", "3", "--json"});
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["tool"] == "gausslink");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["command"] == "generate");
  CHECK(j["seed"] == 1);
  CHECK(j["result"]["terms"].size() == 3);
}

TEST_CASE("invariants on a knot code") {
  std::string path = temp_file("trefoil.gauss", "O1+ U2+ O3+ U1+ O2+ U3+\n");
  run r = cli({"invariants", "--gauss", path, "--c2n", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("c_2 = 1") != std::string::npos);
  run r4 = cli({"invariants", "--gauss", path, "--c2n", "2"});
  CHECK(r4.out.find("c_4 = 0") != std::string::npos);
}

TEST_CASE("invariants on a link code") {
  std::string path = temp_file(
      "borromean.gauss", "O1+ U2- O4- U5+ / U1+ O3+ U4- O6- / O2- U3+ O5+ U6-\n");
  run r = cli({"invariants", "--gauss", path, "--milnor", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mu(23;1): raw=1 modulus=0 bracket=1") != std::string::npos);
  run s = cli({"invariants", "--gauss", path});
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("lk(1,2) = 0") != std::string::npos);
}

TEST_CASE("comment lines and blank lines are ignored in gauss files") {
  std::string path =
      temp_file("commented.gauss", "# trefoil\n\nO1+ U2+ O3+ U1+ O2+ U3+\n");
  run r = cli({"invariants", "--gauss", path, "--c2n", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("c_2 = 1") != std::string::npos);
}

TEST_CASE("geometry subcommand reports metrics and integrals") {
  run r = cli({"geometry", "--polylink", "hopf:n=90"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rop") != std::string::npos);
  CHECK(r.out.find("lk-integral(1,2)") != std::string::npos);
  // averages appear only when sampling is requested
  CHECK(r.out.find("cr-mean") == std::string::npos);
  run s = cli({"geometry", "--polylink", "hopf:n=90", "--samples", "40"});
  CHECK(s.out.find("cr-mean") != std::string::npos);
}

TEST_CASE("polylink argument accepts files as well as builtin names") {
  run dump = cli({"geometry", "--polylink", "circle:n=24", "--json"});
  nlohmann::json j = nlohmann::json::parse(dump.out);
  // round trip the builtin through a file
  run r = cli({"geometry", "--polylink", "circle:n=24"});
  CHECK(r.exit_code == 0);
  CHECK(cli({"geometry", "--polylink", "no_such_builtin"}).exit_code == 1);
}

TEST_CASE("bounds subcommand audits a knot code") {
  std::string path = temp_file("trefoil2.gauss", "O1+ U2+ O3+ U1+ O2+ U3+\n");
  run r = cli({"bounds", "--gauss", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("conway-crossing-bound") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify exits zero on sound fixtures") {
  run r = cli({"verify", "--polylink", "circle", "--samples", "40"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n/a") != std::string::npos);
}

TEST_CASE("errors land on stderr with exit 1") {
  run r = cli({"invariants", "--gauss", "/tmp/gausslink_missing_file.gauss"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("bad usage exits 2") {
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({"invariants", "--no-such-flag"}).exit_code == 2);
  CHECK(cli({}).exit_code == 2);
}

TEST_CASE("--out redirects the report to a file") {
  std::string path = "/tmp/gausslink_test_out.txt";
  std::remove(path.c_str());
  run r = cli({"generate", "--conway", "1", "--out", path});
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("1 loop;t1 h2 h1 t2") != std::string::npos);
}
