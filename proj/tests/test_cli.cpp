#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli/cli.hpp"
#include "cli/expression.hpp"

using namespace ctsum;
using ctsum::cli::parse_ratfun;
using ctsum::cli::render;
using nlohmann::json;

namespace {

const Polynomial j = Polynomial::identity();

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ctsum_test_cli_" + name);
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

bool is_fraction(const json& v) {
  if (!v.is_string()) return false;
  const std::string s = v.get<std::string>();
  const auto slash = s.find('/');
  return slash != std::string::npos && slash > 0 && slash + 1 < s.size();
}

void check_schema(const json& doc) {
  REQUIRE(doc.is_object());
  REQUIRE(doc.contains("identities"));
  REQUIRE(doc.contains("summary"));
  REQUIRE(doc.contains("timing_ms"));
  CHECK(doc["timing_ms"].is_number_integer());
  CHECK(doc["summary"]["pass"].is_boolean());
  CHECK(doc["summary"]["failures"].is_number_integer());
  int failures = 0;
  for (const auto& ident : doc["identities"]) {
    CHECK(ident["id"].is_number_integer());
    CHECK(ident["n_max"].is_number_integer());
    REQUIRE(ident["levels"].is_object());
    for (const auto& [name, checks] : ident["levels"].items()) {
      REQUIRE(checks.is_array());
      for (const auto& c : checks) {
        CHECK(c["params"].is_object());
        REQUIRE(c["pass"].is_boolean());
        if (!c["pass"].get<bool>()) {
          ++failures;
          CHECK(c.contains("witness"));
        }
        if (c.contains("witness")) {
          CHECK(is_fraction(c["witness"]["lhs"]));
          CHECK(is_fraction(c["witness"]["rhs"]));
        }
      }
    }
  }
  CHECK(doc["summary"]["failures"].get<int>() == failures);
  CHECK(doc["summary"]["pass"].get<bool>() == (failures == 0));
}

}  // namespace

TEST_CASE("parse_ratfun examples") {
  CHECK(parse_ratfun("j/(j+2)") == rf_reduce(j, j + Polynomial(2)));
  CHECK(parse_ratfun("(j^2-1)/(j^2+2*j+1)") == rf_reduce(j - Polynomial(1), j + Polynomial(1)));
  CHECK_THROWS_AS(parse_ratfun("1/0"), cli::ParseError);
  CHECK(parse_ratfun("  -3 * j ^ 2 ") == RationalFunction(j * j * Rational(-3)));
  CHECK(parse_ratfun("1/j/j") == rf_reduce(Polynomial(1), j * j));
  CHECK(parse_ratfun("2-j-1") == RationalFunction(Polynomial(1) - j));
  CHECK(parse_ratfun("(j+1)^0") == RationalFunction(1));
}

TEST_CASE("parse_ratfun syntax errors carry a position") {
  try {
    parse_ratfun("j+*2");
    FAIL("expected a parse error");
  } catch (const cli::ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_ratfun(""), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("(j+1"), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("j)"), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("x+1"), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("j^-1"), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("-j"), cli::ParseError);
  CHECK_THROWS_AS(parse_ratfun("j/(j-j)"), cli::ParseError);
}

TEST_CASE("parse and render round trip") {
  const std::vector<std::string> inputs{"j/(j+2)",          "(j^2-1)/(j^2+2*j+1)", "(j+1)^2/j", "j/(j+1)",
                                        "-1*j",             "1/2",                 "5",         "(3*j-1)/(2*j^2+4)",
                                        "-1*(j+1)*(j-7)/j^3", "(j-1)/(-2*j)"};
  for (const auto& text : inputs) {
    CAPTURE(text);
    const RationalFunction r = parse_ratfun(text);
    const std::string once = render(r);
    CHECK(parse_ratfun(once) == r);
    CHECK(render(parse_ratfun(once)) == once);
  }
}

TEST_CASE("run: exit codes") {
  CHECK(run({"verify", "--identity", "3", "--n-max", "10"}).code == cli::kExitSuccess);
  const Result alt = run({"verify", "--identity", "7", "--alt", "--n-max", "3"});
  CHECK(alt.code == cli::kExitFailure);
  CHECK(alt.out.find("delta 3") != std::string::npos);
  CHECK(alt.out.find("delta 18") != std::string::npos);
  CHECK(alt.out.find("delta 66") != std::string::npos);
  CHECK(run({"verify", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--identity", "9", "--n-max", "3"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--identity", "3", "--n-max", "3", "--level", "nope"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "--identity", "3", "--n", "2"}).code == cli::kExitUsage);
  CHECK(run({"gosper", "--ratio", "j/("}).code == cli::kExitUsage);
  CHECK(run({"certificate", "--identity", "8", "--n", "2"}).code == cli::kExitUsage);
}

TEST_CASE("run: subcommand output") {
  const Result g = run({"gosper", "--ratio", "j/(j+2)"});
  CHECK(g.code == 0);
  CHECK(g.out.find("certificate R(j) = -1*j-1") != std::string::npos);
  const Result ns = run({"gosper", "--ratio", "j/(j+1)"});
  CHECK(ns.code == 0);
  CHECK(ns.out.find("not Gosper-summable") != std::string::npos);
  const Result d = run({"decompose", "--identity", "8", "--n", "1", "--j", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("c_-2 = 1/6") != std::string::npos);
  CHECK(d.out.find("c_-1 = -1/36") != std::string::npos);
  CHECK(d.out.find("reconstruction: exact") != std::string::npos);
  const Result c = run({"certificate", "--identity", "5", "--n", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("verified") != std::string::npos);
  const Result v = run({"verify", "--identity", "2", "--n-max", "4", "--level", "value"});
  CHECK(v.code == 0);
  CHECK(v.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("run: JSON report schema and exit code agreement") {
  const auto ok_path = temp_path("ok.json");
  CHECK(run({"verify", "--identity", "all", "--n-max", "4", "--json", ok_path.string()}).code == 0);
  const json ok = read_json(ok_path);
  check_schema(ok);
  CHECK(ok["identities"].size() == 8);
  CHECK(ok["summary"]["failures"] == 0);

  const auto bad_path = temp_path("bad.json");
  CHECK(run({"verify", "--identity", "7", "--n-max", "3", "--alt", "--json", bad_path.string()}).code == 1);
  const json bad = read_json(bad_path);
  check_schema(bad);
  CHECK(bad["summary"]["failures"] == 3);
  const auto& alt = bad["identities"][0]["levels"]["alt"];
  REQUIRE(alt.size() == 3);
  CHECK(alt[0]["witness"]["delta"] == "3/1");
  CHECK(alt[1]["witness"]["delta"] == "18/1");
  CHECK(alt[2]["witness"]["delta"] == "66/1");

  const auto rep_path = temp_path("report.json");
  CHECK(run({"report", "--n-max", "3", "--json", rep_path.string()}).code == 0);
  check_schema(read_json(rep_path));
  CHECK(run({"report", "--n-max", "3"}).code == cli::kExitUsage);

  std::filesystem::remove(ok_path);
  std::filesystem::remove(bad_path);
  std::filesystem::remove(rep_path);
}

TEST_CASE("run: reports are deterministic apart from timing") {
  const auto a = temp_path("det_a.json");
  const auto b = temp_path("det_b.json");
  REQUIRE(run({"verify", "--identity", "all", "--n-max", "5", "--json", a.string()}).code == 0);
  REQUIRE(run({"verify", "--identity", "all", "--n-max", "5", "--json", b.string()}).code == 0);
  json ja = read_json(a);
  json jb = read_json(b);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  CHECK(ja.dump() == jb.dump());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("the installed executable honours the exit code contract") {
  const std::string exe = CTSUM_EXE;
  const auto quiet = " > " + temp_path("stdout.txt").string() + " 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + quiet).c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("verify --identity 3 --n-max 6") == 0);
  CHECK(status("verify --identity 7 --alt --n-max 3") == 1);
  CHECK(status("verify --bogus") == 2);
  std::filesystem::remove(temp_path("stdout.txt"));
}
