#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spatial/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the installed binary through the shell; stderr is merged when asked.
Result shell(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SPATIAL_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = spatial::cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/spatial_cli_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("second-kind triangle row") {
  Result r = shell("stirling triangle --kind S --n 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n1 15 25 10 1\n") != std::string::npos);
  Result c = shell("stirling triangle --kind c --n 4");
  CHECK(c.out.find("\n6 11 6 1\n") != std::string::npos);
  Result s = shell("stirling triangle --kind s --n 3");
  CHECK(s.out.find("\n2 -3 1\n") != std::string::npos);
  Result l = shell("stirling triangle --kind L --n 3 --json");
  auto j = nlohmann::json::parse(l.out);
  CHECK(j["rows"][3] == nlohmann::json({"0", "6", "6", "1"}));
}

TEST_CASE("verify-all passes and is deterministic") {
  Result a = shell("verify-all --m 2 --nmax 4 --seed 1");
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["failures"] == 0);
  CHECK(j["passed"] == true);
  CHECK(j["cases"].get<long>() > 0);
  for (const auto& s : j["suites"]) {
    CHECK(s.contains("suite"));
    CHECK(s.contains("cases"));
    CHECK(s.contains("failures"));
    CHECK(s.contains("max_discrepancy"));
  }
  Result b = shell("verify-all --m 2 --nmax 4 --seed 1");
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with code 2") {
  Result r = shell("stirling triangle --kind S --n 5 --no-such-flag", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("Usage") != std::string::npos);
  CHECK(shell("no-such-command").code == 2);
  CHECK(shell("").code == 2);
  CHECK(shell("stirling triangle --kind Q --n 3").code == 2);
  CHECK(shell("stirling verify --suite nonsense").code == 2);
  CHECK(shell("--help").code == 0);
}

TEST_CASE("malformed JSON input exits with code 2") {
  CHECK(shell("factorial --omega '{\"m\":2,\"weights\":[\"1/0\",\"1\"]}' --n 2").code == 2);
  CHECK(shell("factorial --omega '{\"m\":3,\"weights\":[\"1\",\"1\"]}' --n 2").code == 2);
  CHECK(shell("factorial --omega /nonexistent/file.json --n 2").code == 2);
  CHECK(shell("factorial --omega '{not json' --n 2").code == 2);
  CHECK(shell("stirling apply --kind S --k 1 --fn '{\"rank\":2,\"m\":2,\"entries\":[{\"idx\":[1,0],\"val\":\"1\"}]}'").code == 2);
  CHECK(shell("wick normal-order --in '[{\"op\":\"a*\",\"point\":0}]'").code == 2);
  CHECK(shell("poisson expect --omega '[1,2]' --poly '[{\"rank\":1,\"m\":1,\"entries\":[]}]'").code == 2);
}

TEST_CASE("factorial measure output") {
  Result r = in_process({"factorial", "--omega", "{\"m\":1,\"weights\":[\"3\"]}", "--n", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 2);
  CHECK(j["entries"][0]["val"] == "6");
  Result rising = in_process({"factorial", "--omega", "[3]", "--n", "2", "--kind", "rising"});
  CHECK(nlohmann::json::parse(rising.out)["entries"][0]["val"] == "12");
}

TEST_CASE("operator application from a file") {
  // f(x, y) = 1 on one point; S(2,1) f = f(x, x) = 1
  std::string path = write_temp("f.json", R"({"rank":2,"m":1,"entries":[{"idx":[0,0],"val":"1"}]})");
  Result r = in_process({"stirling", "apply", "--kind", "S", "--n", "2", "--k", "1", "--fn", path});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 1);
  CHECK(j["entries"][0]["val"] == "1");
  CHECK(in_process({"stirling", "apply", "--kind", "S", "--n", "3", "--k", "1", "--fn", path}).code == 2);
}

TEST_CASE("Poisson expectation routes") {
  std::string poly = R"([{"rank":3,"m":1,"entries":[{"idx":[0,0,0],"val":"1"}]}])";
  for (const char* route : {"stirling", "finite"}) {
    Result r = in_process({"poisson", "expect", "--omega", "[1]", "--poly", poly, "--route", route});
    CHECK(nlohmann::json::parse(r.out)["value"] == "5");
  }
  Result s = in_process({"poisson", "expect", "--omega", "[1]", "--poly", poly, "--route", "series", "--K", "60"});
  CHECK(std::abs(nlohmann::json::parse(s.out)["value"].get<double>() - 5.0) < 1e-9);
  Result f = in_process({"--float", "poisson", "expect", "--omega", "[\"1/2\"]", "--poly", poly});
  CHECK(nlohmann::json::parse(f.out)["value"].is_number());
}

TEST_CASE("transforms and star product") {
  std::string f = R"([{"rank":0,"m":1,"entries":[{"idx":[],"val":"2"}]},{"rank":1,"m":1,"entries":[{"idx":[0],"val":"3"}]}])";
  Result fwd = in_process({"ktransform", "forward", "--in", f});
  CHECK(fwd.code == 0);
  Result inv = in_process({"ktransform", "inverse", "--in", fwd.out});
  CHECK(nlohmann::json::parse(inv.out) == nlohmann::json::parse(f));
  Result st = in_process({"ktransform", "star", "--in", f, "--in2", f});
  CHECK(st.code == 0);
  CHECK(in_process({"ktransform", "star", "--in", f}).code == 2);
  Result e = in_process({"polyop", "euler-expand", "--poly", f});
  CHECK(e.code == 0);
}

TEST_CASE("touchard and wick commands") {
  Result b = in_process({"touchard", "measure", "--omega", "[1]", "--n", "4", "--kind", "bell"});
  CHECK(nlohmann::json::parse(b.out)["entries"][0]["val"] == "15");
  CHECK(in_process({"touchard", "measure", "--omega", "[2]", "--n", "2", "--kind", "bell"}).code == 2);
  Result k = in_process({"wick", "katriel", "--n", "4", "--m", "2", "--seed", "7"});
  CHECK(k.code == 0);
  CHECK(nlohmann::json::parse(k.out)["equal"] == true);
  Result w = in_process({"wick", "normal-order", "--in", R"([{"op":"a-","point":0},{"op":"a+","point":0}])", "--sigma",
                         R"({"m":1,"weights":["2"]})"});
  auto j = nlohmann::json::parse(w.out);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == "1/2");
  Result smeared = in_process({"wick", "normal-order", "--in", R"([{"op":"rho","fn":[1,2]},{"op":"a+","fn":{"m":2,"weights":["1","-1"]}}])"});
  CHECK(smeared.code == 0);
}

TEST_CASE("module verify subcommands") {
  for (const char* module : {"factorial", "stirling", "polyop", "ktransform", "poisson", "touchard", "wick"}) {
    Result r = shell(std::string(module) + " verify --suite " +
                     (std::string(module) == "factorial"    ? "genfun"
                      : std::string(module) == "stirling"   ? "orthogonality"
                      : std::string(module) == "polyop"     ? "grunert"
                      : std::string(module) == "ktransform" ? "star"
                      : std::string(module) == "poisson"    ? "mecke"
                      : std::string(module) == "touchard"   ? "dobinski"
                                                            : "katriel") +
                     " --m 2 --nmax 4 --seed 7");
    CHECK_MESSAGE(r.code == 0, module);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
  }
}
