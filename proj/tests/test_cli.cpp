#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "sigma");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = sigma_cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("check assoc: counterexample verdict and strict exit code") {
  auto r = cli({"check", "assoc", "{1,2}", "{1*,2*}", "{1*}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: false") != std::string::npos);
  CHECK(r.out.find("witness: assoc({1, 2}, {1*, 2*}, {1*})") != std::string::npos);

  r = cli({"--strict", "check", "assoc", "{1,2}", "{1*,2*}", "{1*}"});
  CHECK(r.code == 2);
  r = cli({"check", "assoc", "{1,2}", "{1*,2*}", "{1*}", "--strict"});
  CHECK(r.code == 2);
  r = cli({"--strict", "check", "assoc", "{a,b}", "{a*,b*}", "{c,d}"});
  CHECK(r.code == 0);
  r = cli({"--strict", "check", "assoc", "{1,2}", "{1*,2*}", "{1}"});
  CHECK(r.code == 0);
}

TEST_CASE("check localassoc reports the YXZ witness") {
  auto r = cli({"check", "localassoc", "{1,2}", "{1*,2*}", "{1,2}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: false") != std::string::npos);
  CHECK(r.out.find("witness: YXZ") != std::string::npos);
}

TEST_CASE("check group and af") {
  auto r = cli({"--json", "check", "group", "{}", "{1}", "{1*}"});
  auto j = json_lines(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["result"]["verdict"] == false);
  CHECK(j[0]["witness"]["replay"] == "assoc({1}, {1}, {1*})");

  r = cli({"--strict", "check", "af", "{1,2}", "{3}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: true") != std::string::npos);
}

TEST_CASE("human and json modes agree on verdicts") {
  const std::vector<std::vector<std::string>> cases = {
      {"assoc", "{1,2}", "{1*,2*}", "{1*}"},
      {"assoc", "{a,b}", "{a*,b*}", "{c,d}"},
      {"localassoc", "{1,2}", "{1*,2*}", "{1,2}"},
      {"localassoc", "{1}", "{2}", "{3}"},
      {"af", "{1}", "{1*}"},
      {"group", "{}"}};
  for (auto args : cases) {
    args.insert(args.begin(), "check");
    const auto human = cli(args);
    args.insert(args.begin(), "--json");
    const auto js = json_lines(cli(args).out);
    REQUIRE(js.size() == 1);
    const bool verdict = js[0]["result"]["verdict"];
    CHECK(human.out.find(verdict ? "verdict: true" : "verdict: false") != std::string::npos);
    CHECK(js[0]["ok"] == verdict);
  }
}

TEST_CASE("solve one-shot") {
  auto r = cli({"solve", "--a", "{x,y}", "--b", "{x,y}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("X = {}") != std::string::npos);

  r = cli({"solve", "--a", "{1}", "--b", "{1*}"});
  CHECK(r.code == 3);
  CHECK(r.out.find("status: no-solution") != std::string::npos);

  std::string big_a = "{";
  for (int i = 0; i < 17; ++i) big_a += (i ? ",x" : "x") + std::to_string(i);
  big_a += "}";
  r = cli({"--json", "solve", "--a", big_a, "--b", "{x0*}"});
  CHECK(r.code == 4);
  CHECK(json_lines(r.out)[0]["result"]["status"] == "oracle-infeasible");
}

TEST_CASE("eval: file, json records and exit codes") {
  const auto path = write_temp("sigma_cli_eval.sigma",
                               "A = {α, β}\nB = {a*, b*, c*, α, β}\n"
                               "solve X in A + X = B\nX\n");
  auto r = cli({"eval", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "solve: X\nstatus: solved\nX = {a*, b*, c*}\nverified: true\n{a*, b*, c*}\n");

  r = cli({"--json", "eval", path.string()});
  const auto js = json_lines(r.out);
  REQUIRE(js.size() == 4);
  for (const auto& j : js) {
    CHECK(j.contains("kind"));
    CHECK(j.contains("ok"));
    CHECK(j.contains("result"));
    CHECK(j.contains("input"));
  }
  CHECK(js[2]["kind"] == "solve");
  CHECK(js[2]["ok"] == true);

  const auto chain = write_temp("sigma_cli_chain.sigma", "{1,2} + {1*,2*} + {1,2}\n");
  r = cli({"eval", chain.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning:") == 0);
  r = cli({"--strict", "eval", chain.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);

  const auto broken = write_temp("sigma_cli_broken.sigma", "A = {1\n");
  r = cli({"eval", broken.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli({"eval", "/nonexistent/file.sigma"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"check", "assoc", "{1}", "{2}"}).code == 1);
  CHECK(cli({"check", "magic", "{1}"}).code == 1);
  CHECK(cli({"solve", "--a", "{1"}).code == 1);
  CHECK(cli({"solve", "--a", "{1,", "--b", "{}"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("repl survives errors and matches batch evaluation") {
  const std::string script = "A = {1, 2}\nA + \nB = anti(A)\nA + B\nA & B\n";
  const auto r = cli({"repl"}, script);
  CHECK(r.code == 0);
  CHECK(r.out.find("σ> ") == 0);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.out.find("{}\n") != std::string::npos);
  CHECK(r.out.find("{1, 2}\n") != std::string::npos);

  // Same statements, minus the broken line, as a batch.
  const auto path = write_temp("sigma_cli_repl.sigma", "A = {1, 2}\nB = anti(A)\nA + B\nA & B\n");
  const auto batch = cli({"eval", path.string()});
  std::string repl_results = r.out;
  for (std::string::size_type p; (p = repl_results.find("σ> ")) != std::string::npos;) {
    repl_results.erase(p, std::string("σ> ").size());
  }
  CHECK(repl_results == batch.out + "\n");
}
