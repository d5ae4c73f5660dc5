#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "output_record.hpp"

using namespace spectra::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Sets an environment variable for the lifetime of the guard.
struct EnvGuard {
  EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~EnvGuard() { unsetenv(name_); }
  const char* name_;
};

}  // namespace

TEST_CASE("spectrum prints the k,value,mult,exact contract") {
  const Result r = invoke({"spectrum", "--model", "gaussian", "--n", "3", "--rho", "1", "--kmax", "10"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "k,value,mult,exact,provenance");
  CHECK(l[1].rfind("1,0,1,true,", 0) == 0);
  CHECK(l[2].rfind("2,1,3,true,", 0) == 0);
  CHECK(l[3].rfind("5,2,6,true,", 0) == 0);
}

TEST_CASE("bound prints the name,value,valid,reason contract with its normalization note") {
  const Result r = invoke({"bound", "--name", "z-upper", "--rho", "1", "--lsob", "1", "--m2", "1", "--t", "2"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l[0] == "name,value,valid,reason,provenance");
  CHECK(l[1].rfind("z-upper,5.33506683375364,true,", 0) == 0);
  CHECK(r.err.find("(2/L)") != std::string::npos);
  const Result edge = invoke({"bound", "--name", "z-upper", "--rho", "1", "--lsob", "1", "--m2", "1", "--t", "1.6094379124341003"});
  CHECK(edge.code == 0);
  CHECK(lines(edge.out)[1].rfind("z-upper,unbounded,false,s >= L/2", 0) == 0);
}

TEST_CASE("compare example exits 0; a violated ordering exits 3") {
  CHECK(invoke({"compare", "--source", "gaussian:1", "--target", "potential:x^2/2+x^4/4", "--kmax", "20"}).code == 0);
  const Result bad = invoke({"compare", "--source", "gaussian:1", "--target", "gaussian:4", "--L", "0.4", "--kmax", "5", "--N", "800"});
  CHECK(bad.code == kExitComparisonFailed);
  CHECK(bad.err.find("violation") != std::string::npos);
  CHECK(lines(bad.out).size() == 6);
}

TEST_CASE("usage errors exit 2 with usage text") {
  const Result unknown = invoke({"spectrum", "--model", "gaussian", "--bogus", "1"});
  CHECK(unknown.code == kExitValidation);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(unknown.out.empty());
  CHECK(invoke({}).code == kExitValidation);
  CHECK(invoke({"frobnicate"}).code == kExitValidation);
  CHECK(invoke({"spectrum", "--model", "torus"}).code == kExitValidation);
  CHECK(invoke({"--format", "xml", "spectrum", "--model", "gaussian"}).code == kExitValidation);
}

TEST_CASE("validation errors exit 2") {
  CHECK(invoke({"spectrum", "--model", "gaussian", "--rho", "-1"}).code == kExitValidation);
  CHECK(invoke({"spectrum", "--model", "sphere", "--n", "1"}).code == kExitValidation);
  CHECK(invoke({"solve1d", "--measure", "potential:x^"}).code == kExitValidation);
  CHECK(invoke({"counterexample", "--n", "2"}).code == kExitValidation);
  const Result r = invoke({"count", "--model", "gaussian", "--measure", "gaussian:1", "--lambda", "1"});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("exactly one") != std::string::npos);
}

TEST_CASE("help exits 0 and documents the column contracts") {
  const Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k,value,mult,exact") != std::string::npos);
  CHECK(r.out.find("name,value,valid,reason") != std::string::npos);
  CHECK(r.out.find("SPECTRA_GRID_N") != std::string::npos);
  CHECK(invoke({"bound", "--help"}).out.find("--lsob") != std::string::npos);
}

TEST_CASE("SPECTRA_GRID_N sets the default grid") {
  {
    EnvGuard env("SPECTRA_GRID_N", "800");
    const Result r = invoke({"--format", "json", "solve1d", "--measure", "gaussian:1", "--kmax", "3"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["inputs"]["N"] == "800");
  }
  {
    EnvGuard env("SPECTRA_GRID_N", "lots");
    CHECK(invoke({"solve1d", "--measure", "gaussian:1"}).code == kExitValidation);
  }
  const Result r = invoke({"--format", "json", "solve1d", "--measure", "gaussian:1", "--kmax", "3", "--N", "900"});
  CHECK(nlohmann::json::parse(r.out)["inputs"]["N"] == "900");
}

TEST_CASE("subcommand outputs") {
  SUBCASE("count") {
    const auto l = lines(invoke({"count", "--model", "gaussian", "--n", "3", "--lambda", "2"}).out);
    CHECK(l[0] == "lambda,value,kind,provenance");
    CHECK(l[1].rfind("2,10,exact,", 0) == 0);
    const auto d = lines(invoke({"count", "--measure", "nu:4", "--a", "-8", "--b", "8", "--lambda", "200"}).out);
    CHECK(d[1].rfind("200,25,discretized,", 0) == 0);
    CHECK(d[2].rfind("200,", 0) == 0);
  }
  SUBCASE("solve1d") {
    const Result r = invoke({"solve1d", "--measure", "gaussian:1", "--a", "-12", "--b", "12", "--kmax", "3"});
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == "k,value,mult,exact,provenance");
    CHECK(l[2].rfind("2,", 0) == 0);
    CHECK(std::stod(l[2].substr(2)) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(l[2].find(",1,false,") != std::string::npos);
    CHECK(r.err.find("note: discretized on") != std::string::npos);
    CHECK(r.err.find("warning") == std::string::npos);
  }
  SUBCASE("solve1d warns outside validity") {
    const Result r = invoke({"solve1d", "--measure", "exppower:1", "--kmax", "2", "--N", "500", "--method", "weighted"});
    CHECK(r.code == 0);
    CHECK(r.err.find("does not have discrete spectrum") != std::string::npos);
  }
  SUBCASE("transport and profile") {
    const auto t = lines(invoke({"transport", "--source", "gaussian:1", "--target", "gaussian:4", "--x", "0", "2"}).out);
    CHECK(t[0] == "x,T,derivative,provenance");
    REQUIRE(t[2].rfind("2,", 0) == 0);
    std::istringstream row(t[2]);
    std::string x, T, dT;
    std::getline(row, x, ',');
    std::getline(row, T, ',');
    std::getline(row, dT, ',');
    CHECK(std::stod(T) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::stod(dT) == doctest::Approx(0.5).epsilon(1e-10));
    const auto lip = lines(invoke({"transport", "--source", "exppower:4", "--target", "gaussian:1", "--lipschitz"}).out);
    CHECK(lip[1].rfind("lipschitz,unbounded,false,", 0) == 0);
    const auto p = lines(invoke({"profile", "--measure", "gaussian:1", "--v", "0.5"}).out);
    CHECK(p[1].rfind("0.5,0.398942280401433,", 0) == 0);
  }
  SUBCASE("trace") {
    const auto l = lines(invoke({"trace", "--model", "gaussian", "--t", "2"}).out);
    CHECK(l[0] == "t,value,partial,tail,lower_estimate,provenance");
    CHECK(l[1].rfind("2,1.15651764274967,", 0) == 0);
  }
  SUBCASE("counterexample") {
    const auto l = lines(invoke({"counterexample"}).out);
    REQUIRE(l.size() == 9);
    CHECK(l[1].rfind("3,1.5,3/2,2,true,", 0) == 0);
    CHECK(l[8].rfind("10,1.11111111111111,10/9,2,true,", 0) == 0);
  }
  SUBCASE("classify") {
    CHECK(lines(invoke({"classify", "--p", "1"}).out)[1].rfind("1,false,false,false,1,", 0) == 0);
    CHECK(lines(invoke({"classify", "--p", "1.5"}).out)[1].rfind("1.5,true,true,false,2,", 0) == 0);
    CHECK(lines(invoke({"classify", "--p", "inf"}).out)[1].rfind("inf,true,true,true,3,", 0) == 0);
    CHECK(lines(invoke({"classify", "--discrete", "--hs"}).out)[1].rfind(",true,true,false,2,", 0) == 0);
  }
  SUBCASE("bound names") {
    for (const char* name : {"harnack", "trace-rate", "feasible-time", "wang", "trace-lambda", "clr-count", "clr-compare",
                             "clr-threshold", "hyper", "hyper-from-time", "lp-ball", "gaussian-lambda"}) {
      const Result r = invoke({"bound", "--name", name, "--rho", "1", "--t", "1", "--lambda", "9", "--k", "400", "--n", "3"});
      CHECK_MESSAGE(r.code == 0, name << ": " << r.err);
    }
  }
}

TEST_CASE("every result row carries a provenance string") {
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", "--model", "sphere", "--n", "3"},
      {"count", "--model", "nu", "--p", "4", "--lambda", "200"},
      {"solve1d", "--measure", "gaussian:1", "--N", "400", "--kmax", "3"},
      {"transport", "--source", "gaussian:1", "--target", "exppower:4", "--xmin", "-1", "--xmax", "1", "--points", "5"},
      {"profile", "--measure", "exppower:3"},
      {"bound", "--name", "hyper", "--lsob", "1", "--p", "2", "--t", "1"},
      {"trace", "--model", "sphere", "--n", "3", "--t", "0.5", "1"},
      {"counterexample", "--n", "4", "7"},
      {"classify", "--p", "3"},
  };
  for (const auto& c : commands) {
    const Result r = invoke([&] { auto v = c; v.insert(v.begin(), {"--format", "json"}); return v; }());
    REQUIRE_MESSAGE(r.code == 0, c[0] << ": " << r.err);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == c[0]);
    REQUIRE(!j["results"].empty());
    for (const auto& row : j["results"]) CHECK_FALSE(row["provenance"].get<std::string>().empty());
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"transport", "--source", "gaussian:1", "--target", "potential:x^4/4+x^2", "--x", "-1", "0.5", "3"};
  const Result a = invoke(args), b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  auto json_args = args;
  json_args.push_back("--format");
  json_args.push_back("json");
  CHECK(invoke(json_args).out == invoke(json_args).out);
}

TEST_CASE("OutputRecord round-trips through JSON losslessly") {
  OutputRecord rec;
  rec.command = "demo";
  rec.inputs = {{"a", "1"}, {"b", "x^2/2"}};
  rec.columns = {"i", "x", "ok", "s"};
  rec.add_row({std::int64_t{7}, 0.1, true, std::string("a,\"b\"")}, "first");
  rec.add_row({std::int64_t{-3}, 1.0 / 3.0, false, std::string("")}, "second");
  rec.add_row({std::int64_t{0}, 2.0, true, std::string("x")}, "third");
  rec.add_row({std::int64_t{1}, 5e-324, false, std::string("y")}, "fourth");
  rec.add_row({std::int64_t{2}, HUGE_VAL, false, std::string("z")}, "fifth");
  const std::string text = to_json(rec).dump();
  const OutputRecord back = record_from_json(nlohmann::ordered_json::parse(text));
  CHECK(back == rec);
  // The CLI's own JSON also round-trips.
  const Result r = invoke({"--format", "json", "bound", "--name", "wang", "--rho", "1", "--lsob", "1", "--m2", "1", "--k", "100"});
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(to_json(record_from_json(parsed)) == parsed);
  CHECK_THROWS(rec.add_row({std::int64_t{1}}, "short"));
}

TEST_CASE("CSV escapes fields with separators") {
  OutputRecord rec;
  rec.command = "demo";
  rec.columns = {"s"};
  rec.add_row({std::string("a,\"b\"")}, "p, q");
  std::ostringstream out;
  write_csv(out, rec);
  CHECK(out.str() == "s,provenance\n\"a,\"\"b\"\"\",\"p, q\"\n");
}
