#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = chowlab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("chowlab_test_" + name);
  std::ofstream(p) << content;
  return p;
}

json without_time(json j) {
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST_CASE("fh reports ranks and status") {
  const auto r = invoke({"fh", "--d", "3", "--n", "2", "--m", "3"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["command"] == "fh");
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["rank"] == 220);
  CHECK(j["result"]["dim_coker"] == 0);
  CHECK(j["parameters"]["d"] == 3);
  CHECK(j.contains("wall_time"));
  CHECK(r.err.find("rank 220") != std::string::npos);
}

TEST_CASE("fh kernels and global flags after the subcommand") {
  const auto r = invoke({"fh", "--d", "2", "--n", "2", "--m", "3", "--kernel", "--prime", "2"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["kernel"].size() == 1);
  CHECK(j["result"]["kernel_mod_p"]["dim"] == 1);
  CHECK(j["result"]["kernel_mod_p"]["generators"][0] ==
        "z200*z011^2 + z110^2*z002 + z110*z101*z011 + z101^2*z020");
}

TEST_CASE("fh dumps the matrix") {
  const fs::path p = fs::temp_directory_path() / "chowlab_test_dump.txt";
  const auto r = invoke({"--dump-matrix", p.string(), "fh", "--d", "2", "--n", "2", "--m", "2"});
  CHECK(r.code == 0);
  std::ifstream in(p);
  std::size_t rows = 0, cols = 0;
  in >> rows >> cols;
  CHECK(rows == 21);
  CHECK(cols == 21);
}

TEST_CASE("hilbert numerator and tables") {
  auto r = invoke({"hilbert", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["numerator"] == "1 + t(2q+2q^2) + t^2 q^3");
  CHECK(r.report()["status"] == "pass");
  r = invoke({"--table", "hilbert", "--lambda", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree\tcharacter\ttableaux\n1\tq+q^2\t2\n");
  r = invoke({"hilbert", "--d", "3", "--lambda", "2,1"});
  CHECK(r.code == 2);
}

TEST_CASE("plethysm, foulkes and hermite") {
  auto r = invoke({"plethysm", "--m", "3", "--d", "3", "--k", "3"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["dimension"] == "220");
  CHECK(j["result"]["decomposition"].size() == 5);
  CHECK(j["result"]["decomposition"][4]["lambda"] == "(4,4,1)");
  r = invoke({"foulkes", "--m", "2", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["contained"] == true);
  r = invoke({"hermite", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["checked"] == 16);
}

TEST_CASE("cubic tests read form files") {
  const fs::path xyz = write_temp("xyz.json", R"({"1,1,1": "1"})");
  const fs::path fermat = write_temp("fermat.json", R"({"3,0,0": "1", "0,3,0": "1", "0,0,3": "1"})");
  auto r = invoke({"cubic", "--test", "aronhold", "--input", xyz.string()});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["decomposable"] == true);
  CHECK(r.report()["result"]["hessian"]["1,1,1"] == "2");
  r = invoke({"cubic", "--test", "aronhold", "--input", fermat.string()});
  CHECK(r.report()["result"]["decomposable"] == false);
  r = invoke({"cubic", "--test", "d2rank", "--input", fermat.string()});
  CHECK(r.report()["result"]["rank"] == 8);
  r = invoke({"cubic", "--test", "d2rank", "--input", xyz.string()});
  CHECK(r.report()["result"]["rank"] <= 6);
  r = invoke({"cubic", "--test", "complex"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["generic_rank"] == 8);
  r = invoke({"cubic", "--test", "aronhold"});
  CHECK(r.code == 2);
  r = invoke({"cubic", "--test", "aronhold", "--input", "/nonexistent/form.json"});
  CHECK(r.code == 2);
  CHECK(r.report()["error"]["code"] == "ParseError");
}

TEST_CASE("recover") {
  const fs::path f = write_temp("product.json", R"({"2,0,0": "1", "1,1,0": "7", "1,0,1": "10", "0,2,0": "10", "0,1,1": "29", "0,0,2": "21"})");
  auto r = invoke({"recover", "--d", "2", "--n", "2", "--v1", "2,5", "--input", f.string()});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["forms"] == json::parse(R"([["1","2","3"],["1","5","7"]])"));
  r = invoke({"recover", "--d", "2", "--n", "2", "--v1", "2,2", "--input", f.string()});
  CHECK(r.code == 1);
  CHECK(r.report()["error"]["code"] == "SingularM");
}

TEST_CASE("tor tables and fits") {
  auto r = invoke({"tor", "--vars", "2", "--i", "1", "--d", "2", "--nmax", "8"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["table"].size() == 8);
  CHECK(j["result"]["table"][7]["dim"] == 28);
  CHECK(j["result"]["fit"]["degree"] == 2);
  CHECK(j["result"]["fit"]["bound_ok"] == true);
  r = invoke({"--table", "tor", "--vars", "2", "--i", "1", "--d", "2", "--nmax", "4"});
  CHECK(r.out == "n\tdim\n1\t0\n2\t1\n3\t3\n4\t6\n");
}

TEST_CASE("verify-all quick") {
  const auto r = invoke({"verify-all", "--level", "quick"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["result"]["passed"] == j["result"]["total"]);
  CHECK(j["result"]["total"] == 13);
  CHECK(r.err.find("[FAIL]") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nosuch"}).code == 2);
  CHECK(invoke({"fh", "--d", "2"}).code == 2);
  CHECK(invoke({"fh", "--d", "x", "--n", "2", "--m", "3"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  const auto big = invoke({"fh", "--d", "9", "--n", "9", "--m", "9"});
  CHECK(big.code == 3);
  CHECK(big.report()["error"]["code"] == "TooLarge");
  CHECK(big.report()["status"] == "fail");
  CHECK(invoke({"fh", "--d", "2", "--n", "2", "--m", "3", "--prime", "4"}).code == 2);
  CHECK(invoke({"tor", "--vars", "2", "--i", "1", "--d", "2", "--nmax", "12", "--nmin", "0"}).code != 1);
}

TEST_CASE("json output file matches stdout") {
  const fs::path p = fs::temp_directory_path() / "chowlab_test_report.json";
  const auto r = invoke({"--json", p.string(), "hermite", "--a", "2", "--b", "3"});
  CHECK(r.code == 0);
  std::ifstream in(p);
  CHECK(json::parse(in) == r.report());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "7", "fh", "--d", "3", "--n", "2", "--m", "3"},
           {"--seed", "7", "cubic", "--test", "complex"},
           {"--seed", "7", "tor", "--vars", "3", "--i", "1", "--d", "2", "--nmax", "3"},
       }) {
    const auto a = invoke(args), b = invoke(args);
    CHECK(without_time(a.report()) == without_time(b.report()));
  }
}
