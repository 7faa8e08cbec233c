#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Run witt_lab(const std::string& args, const std::string& env = "") {
  const std::string err_path =
      (std::filesystem::temp_directory_path() / ("witt_lab_err_" + std::to_string(getpid()))).string();
  const std::string cmd = env + " " + WITT_LAB_PATH + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string quote(const json& j) { return "'" + j.dump() + "'"; }

json ring(int p, int d, std::vector<int> f, int M) { return {{"p", p}, {"d", d}, {"f", f}, {"M", M}}; }

json element(const json& r, std::vector<long long> coeffs, int prec) {
  json e = r;
  e["coeffs"] = coeffs;
  e["prec"] = prec;
  return e;
}

json witt(const json& r, std::vector<std::vector<long long>> coords) {
  json cs = json::array();
  for (auto& c : coords) cs.push_back(element(r, c, r["M"].get<int>()));
  return {{"ring", r}, {"n", coords.size()}, {"coords", cs}};
}

std::string write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / (name + "_" + std::to_string(getpid()) + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("teich example") {
  const Run r = witt_lab("teich --p 3 --d 1 --M 12 --a 2 --n 3");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "v");
  CHECK(j["coeffs"][0]["coeffs"][0] == 2);
  CHECK(j["coeffs"][1]["coeffs"][0] == 2);
  CHECK(j["coeffs"][2]["coeffs"][0] == 56);
  CHECK(j["coeffs"][2]["prec"] == 10);
}

TEST_CASE("decompose agrees with teich on a Teichmuller lift") {
  // [2] at level 3 over Z_3, M = 12.
  const json r = ring(3, 1, {0, 1}, 12);
  const Run dec = witt_lab("decompose --in " + quote(witt(r, {{2}, {0}, {0}})));
  const Run teich = witt_lab("teich --p 3 --d 1 --M 12 --a 2 --n 3");
  REQUIRE(dec.code == 0);
  const json a = json::parse(dec.out), b = json::parse(teich.out);
  for (int k = 0; k < 3; ++k) CHECK(a["coeffs"][k]["coeffs"] == b["coeffs"][k]["coeffs"]);
}

TEST_CASE("input from a file and from stdin") {
  const json x = witt(ring(5, 2, {2, 4, 1}, 6), {{1, 2}, {3, 4}});
  const std::string path = write_temp("witt_x", x);
  const Run from_file = witt_lab("apply --map F --deg 0 --in " + path);
  const Run from_stdin = witt_lab("apply --map F --deg 0 --in - < " + path);
  const Run inline_json = witt_lab("apply --map F --deg 0 --in " + quote(x));
  std::filesystem::remove(path);
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_stdin.out);
  CHECK(from_file.out == inline_json.out);
  CHECK(json::parse(from_file.out)["n"] == 1);
}

TEST_CASE("emitted JSON re-parses and feeds back in") {
  const json x = witt(ring(3, 1, {0, 1}, 8), {{4}, {7}, {2}});
  const Run v = witt_lab("apply --map V --deg 0 --in " + quote(x));
  REQUIRE(v.code == 0);
  CHECK(json::parse(v.out)["n"] == 4);
  const Run rv = witt_lab("apply --map R --deg 0 --in " + quote(json::parse(v.out)));
  REQUIRE(rv.code == 0);
  CHECK(json::parse(rv.out)["n"] == 3);

  const Run d = witt_lab("diff --in " + quote(x));
  REQUIRE(d.code == 0);
  for (const char* map : {"F", "V", "R"}) {
    const Run m = witt_lab(std::string("apply --deg 1 --map ") + map + " --in " + quote(json::parse(d.out)));
    CHECK(m.code == 0);
    CHECK(json::parse(m.out).contains("components"));
  }
}

TEST_CASE("identical invocations give identical bytes") {
  const json plan = {{"grid", {{{"p", 3}, {"d", 2}, {"n", 3}, {"M", 10}}}}, {"trials", 20}, {"seed", 5}};
  const std::string path = write_temp("plan", plan);
  const Run a = witt_lab("verify --plan " + path);
  const Run b = witt_lab("verify --plan " + path, "WITT_LAB_THREADS=3");
  const Run c = witt_lab("verify --plan " + path + " --seed 6");
  std::filesystem::remove(path);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["seed"] == 5);
  CHECK(json::parse(c.out)["seed"] == 6);
}

TEST_CASE("mutations fail verification") {
  // d = 2: over Z_p the Frobenius is the identity, so a wrong power of it is invisible.
  const json plan = {{"grid", {{{"p", 5}, {"d", 2}, {"n", 4}, {"M", 12}}}}, {"trials", 30}};
  const std::string path = write_temp("plan_m", plan);
  for (const char* m : {"frobenius_e_wrong_power", "verschiebung_e_missing_p", "diff_off_by_one"}) {
    const Run r = witt_lab("verify --plan " + path + " --mutation " + m);
    CHECK(r.code == 1);
    const json j = json::parse(r.out);
    CHECK(j["status"] == "fail");
    bool found = false;
    for (const auto& x : j["results"]) {
      if (x["status"] == "fail") found = found || x["counterexample"]["mutation"] == m;
    }
    CHECK(found);
  }
  std::filesystem::remove(path);
}

TEST_CASE("timing fills millis") {
  const json plan = {{"grid", {{{"p", 3}, {"d", 1}, {"n", 2}, {"M", 8}}}}, {"trials", 5}, {"laws", {"leibniz"}}};
  const std::string path = write_temp("plan_t", plan);
  const Run r = witt_lab("verify --timing --plan " + path);
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["results"][0]["millis"].is_number());
}

TEST_CASE("congruence subcommand") {
  Run r = witt_lab("congruence --p 5 --d 1 --a 2 --i 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"holds\":true}\n");
  r = witt_lab("congruence --p 7 --d 2 --a 3,4 --i 3");
  CHECK(r.code == 0);
  r = witt_lab("congruence --p2-counterexample");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lhs"] == 3);
  CHECK(j["rhs"] == 4);
  CHECK(j["holds"] == false);
}

TEST_CASE("exit codes and error JSON") {
  auto error_of = [](const Run& r) { return json::parse(r.err)["error"].get<std::string>(); };

  Run r = witt_lab("");
  CHECK(r.code == 2);
  CHECK(error_of(r) == "UsageError");

  r = witt_lab("apply --map G --deg 0 --in '{}'");
  CHECK(r.code == 2);

  r = witt_lab("diff --in '{\"ring\":'");
  CHECK(r.code == 2);
  CHECK(error_of(r) == "BadInput");

  r = witt_lab("diff --in /nonexistent/witt.json");
  CHECK(r.code == 2);

  r = witt_lab("teich --p 9 --d 1 --M 4 --a 2 --n 2");
  CHECK(r.code == 2);
  CHECK(error_of(r) == "CompositePrime");

  r = witt_lab("teich --p 3 --d 1 --M 4 --a 2x --n 2");
  CHECK(r.code == 2);

  r = witt_lab("congruence --p 2 --a 2 --i 1");
  CHECK(r.code == 2);
  CHECK(error_of(r) == "OddPrimeRequired");

  r = witt_lab("congruence --p 3 --a 2 --i 3 --M 6");
  CHECK(r.code == 3);
  CHECK(error_of(r) == "PrecisionUnderflow");

  r = witt_lab("k0 --m 1 --in " + quote(witt(ring(3, 1, {0, 1}, 6), {{1}, {3}})));
  CHECK(r.code == 1);
  CHECK(error_of(r) == "NotInKernel");

  r = witt_lab("k0 --m 1 --in " + quote(witt(ring(3, 1, {0, 1}, 6), {{3}, {3}})));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["kind"] == "k0");

  r = witt_lab("verify --default --plan x.json");
  CHECK(r.code == 2);

  const json bad_plan = {{"grid", {{{"p", 3}, {"d", 1}, {"n", 4}, {"M", 5}}}}};
  const std::string path = write_temp("plan_bad", bad_plan);
  r = witt_lab("verify --plan " + path);
  CHECK(r.code == 2);
  CHECK(error_of(r) == "BadPrecision");
  r = witt_lab("verify --default --mutation nope");
  CHECK(r.code == 2);
  std::filesystem::remove(path);

  r = witt_lab("verify --default", "WITT_LAB_THREADS=many");
  CHECK(r.code == 2);

  r = witt_lab("--help");
  CHECK(r.code == 0);
}
