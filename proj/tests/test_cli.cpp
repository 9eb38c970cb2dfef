#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace test;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify") {
  auto r = run({"verify", "--params", R"({"dim": 2, "X": [1, 2]})"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["all_ok"] == true);
  CHECK(j["reps"][0]["spectral"]["C_rho"] == "-8");

  auto all = run({"verify", "--params", R"({"X": [1, 2, 3, 6]})"});
  CHECK(all.code == 0);
  CHECK(all.json()["reps"].size() == 4 + 6 + 4 + 2);
}

TEST_CASE("semisimple") {
  auto r = run({"semisimple", "-p", R"({"X": [2, 1, -4]})"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == false);
  CHECK(r.json()["failing"] == Json::array({"I3(1,2,3)"}));

  auto j6 = run({"semisimple", "-p", R"({"X": [1, 2, 3, 4, 24]})"});
  CHECK(j6.code == 0);
  auto failing = j6.json()["failing"];
  CHECK(failing[0] == "J6(1,5)");

  auto ok = run({"semisimple", "--mode", "constructive", "-p", R"({"X": [1, 2, 3, 6]})"});
  CHECK(ok.code == 0);
  CHECK(ok.json()["report"]["sum_of_squares"] == 96);

  auto deferred = run({"semisimple", "--mode", "constructive", "-p", R"({"X": [1, 2, 3, 4]})"});
  CHECK(deferred.code == 1);
  CHECK(deferred.json()["census_error"]["error"] == "RootsUnavailable");

  auto z5 = run({"semisimple", "--context", "zeta5", "--mode", "constructive", "-p",
                 R"({"X": [32, 8, 2, "1/2", "1/8"]})"});
  CHECK(z5.code == 0);
  CHECK(z5.json()["report"]["sum_of_squares"] == 600);

  auto listed = run({"semisimple", "--context", "[1,1,1,1,1]", "-p", R"({"X": [1, 2]})"});
  CHECK(listed.code == 0);
  CHECK(listed.json()["X"][0] == "[1, 0, 0, 0]");
}

TEST_CASE("irred") {
  auto r = run({"irred", "-p", R"({"dim": 3, "X": [2, 1, -4]})"});
  CHECK(r.code == 0);
  auto rep = r.json()["reps"][0];
  CHECK(rep["oracle_irreducible"] == false);
  CHECK(rep["predicted_irreducible"] == false);
  CHECK(rep["decomposable"] == false);
  CHECK(rep["witness"].contains("Y"));

  auto six = run({"irred", "-p", R"({"dim": 6, "variant": 5, "X": [1, 2, 3, 4, 24]})"});
  CHECK(six.code == 0);
  CHECK(six.json()["reps"][0]["witness"]["Y"] == Json::array({1, 5}));

  auto family = run({"irred", "-p", R"({"X": [2, 3, -1, "1/6", 1]})"});
  CHECK(family.code == 0);
  auto fj = family.json()["dim6_family"];
  CHECK(fj["agreement"] == true);
  CHECK(fj["reducible_variants"] == Json::array({5}));
}

TEST_CASE("eval") {
  auto r = run({"eval", "-p", R"({"dim": 2, "X": [1, 2]})", "--words", "(s1 s2)^3", "s1 s1^-1"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["results"][0]["scalar"] == "-8");
  CHECK(j["results"][1]["scalar"] == "1");

  auto bad = run({"eval", "-p", R"({"dim": 2, "X": [1, 2]})", "--words", "s1 ^"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 4") != std::string::npos);
}

TEST_CASE("build") {
  auto r = run({"build", "-p", R"({"dim": 4, "X": [1, 2, 3, 6]})"});
  CHECK(r.code == 0);
  CHECK(r.json()["reps"][0]["rep"]["spec"]["h"] == "6");
  auto d = run({"build", "-p", R"({"X": [1, 2, 3, 4]})"});
  CHECK(d.json()["deferred"][0]["required_modulus"] == "t^2 - (24)");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"semisimple", "-p", R"({"X": [1, 2, 3, 4, 5, 6]})"}).code == 2);
  CHECK(run({"semisimple", "-p", R"({"X": [1, 1]})"}).code == 2);
  CHECK(run({"semisimple", "-p", "{not json"}).code == 2);
  CHECK(run({"semisimple", "-p", "/nonexistent/job.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"build", "-p", R"({"dim": 4, "X": [1, 2, 3, 4]})"}).code == 2);
  CHECK(run({"semisimple", "--context", "reals", "-p", R"({"X": [1]})"}).code == 2);
  CHECK(run({"semisimple", "--mode", "sideways", "-p", R"({"X": [1]})"}).code == 2);
  CHECK(run({"scan", "--jobs", "0", "-p", R"({"grid": [[1]]})"}).code == 2);
  auto six = run({"semisimple", "-p", R"({"X": [1, 2, 3, 4, 5, 6]})"});
  CHECK(six.err.find("1/3 + 1/|X|") != std::string::npos);
}

TEST_CASE("scan is deterministic across worker counts") {
  std::string job = R"({"grid": {"size": 3, "values": [1, 2, -4, 3, "1/2", 5, -1], "limit": 30}})";
  auto one = run({"scan", "-p", job, "--jobs", "1"});
  auto four = run({"scan", "-p", job, "--jobs", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  auto j = one.json();
  CHECK(j["count"] == 30);
  CHECK(j["results"][0]["X"] == Json::array({1, 2, -4}));
  CHECK(j["results"][0]["verdict"] == false);  // x2^2 + x1 x3 = 4 - 4
  CHECK(j["results"][1]["verdict"] == true);
  auto full = run({"scan", "--mode", "full", "-p", R"({"grid": [[1, 2], [2, 1, -4], [1, 2, 3, 6]]})", "--jobs", "3"});
  CHECK(full.code == 0);
  for (const auto& e : full.json()["results"]) CHECK(e["agreement"] == true);
  auto mixed = run({"scan", "-p", R"({"grid": [[1, 2], [0, 1]]})"});
  CHECK(mixed.code == 2);
  CHECK(mixed.json()["results"][1]["error"] == "InvalidParameters");
}

TEST_CASE("identical jobs give byte-identical output, also through --output") {
  std::string job = R"({"X": [1, 2, 3, 6]})";
  auto a = run({"irred", "-p", job});
  auto b = run({"irred", "-p", job});
  CHECK(a.out == b.out);
  std::string path = "cli_output_test.json";
  auto c = run({"irred", "-p", job, "--output", path});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  std::remove(path.c_str());
}

TEST_CASE("job files") {
  auto job = cli::parse_job(load_json("compositum_census.json"));
  CHECK(job.ctx->degree() == 16);
  CHECK(job.hints.elements.size() == 3);
  CHECK(job.mode == "constructive");
  for (const auto& h : job.hints.elements) CHECK((h.pow(2).is_rational() || h.pow(5).is_one()));
  auto with_roots = cli::parse_job(Json{{"X", {1, 2, 3, 6}}, {"roots", {{"h", -6}}}, {"dim", 4}});
  CHECK(with_roots.roots.h == el(Q(), -6));
}
