#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "symlinv/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = symlinv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

json error_of(const Result& r) {
  const auto j = json::parse(r.err);
  REQUIRE(j.contains("error"));
  return j.at("error");
}

}  // namespace

TEST_CASE("bcoeff and cg examples") {
  CHECK(run_json({"bcoeff", "--n", "1", "--k", "1"}).at("values") == json({"1", "-1"}));
  CHECK(run_json({"bcoeff", "--n", "3", "--k", "3", "--i", "1"}).at("value") == "-108");
  CHECK(run_json({"cg", "--m", "2", "--n", "2", "--p", "2", "--u", "1", "--v", "0", "--w", "0"}).at("value") == "-2");

  const auto csv = run({"bcoeff", "--n", "3", "--k", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,k,i,value\n3,3,0,36\n3,3,1,-108\n3,3,2,108\n3,3,3,-36\n");

  const auto table = run_json({"cg", "--m", "2", "--n", "2", "--p", "2", "--table"});
  const auto& entries = table.at("entries");
  CHECK(entries.size() == 7);
  // Lexicographic in (u, v).
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto prev = std::make_pair(entries[i - 1].at("u").get<int>(), entries[i - 1].at("v").get<int>());
    const auto cur = std::make_pair(entries[i].at("u").get<int>(), entries[i].at("v").get<int>());
    CHECK(prev < cur);
  }
}

TEST_CASE("determinism: identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"cg", "--m", "3", "--n", "3", "--p", "2", "--table"},
      {"phin", "--case", "crystalline_nonsplit", "--n", "2", "--all-submodules", "--benois", "--gr1"},
      {"hecke", "--g", "2", "--t", R"({"a":[0,-1],"a0":-2})", "--all"},
      {"obstruction", "--exponents", "3,2,1,0", "--check-N", "60"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_NOTHROW((void)json::parse(a.out));
  }
}

TEST_CASE("project-endo and phin") {
  const auto p = run_json({"project-endo", "--n", "1", "--k", "1", "--diag", R"(["3", "1/2"])"});
  CHECK(p.at("middle_coeff") == "5/2");
  CHECK(p.at("tail_zero") == true);

  const auto s = run_json({"phin", "--case", "steinberg", "--n", "2", "--benois", "--gr1"});
  CHECK(s.at("regular_submodules").size() == 1);
  CHECK(s.at("regular_submodules")[0].at("labels") == json({2, 1}));
  CHECK(s.at("benois").at("D_-1").at("labels") == json({2}));
  CHECK(s.at("benois").at("D_1").at("labels") == json({2, 1, 0}));
  CHECK(s.at("gr1").at("rank") == 1);
  CHECK(s.at("gr1").at("eigenvalues")[0].at("text") == "1");
  CHECK(s.at("fil0").at("dim") == 3);

  const auto c = run_json({"phin", "--input", R"({"case":"crystalline_split","n":1,"params":{"k":"4"},"D":[1]})", "--benois"});
  CHECK(c.at("benois").at("D_1").at("labels") == json({1, 0}));
}

TEST_CASE("hecke and recover-chi") {
  const auto h = run_json({"hecke", "--g", "2", "--t", R"({"a":[0,0],"a0":-1})"});
  CHECK(h.at("eigenvalues")[0].at("value").at("text") == "p^(-3/2)*sigma^-1");
  CHECK(run_json({"hecke", "--g", "2", "--t", R"({"a":[0,0],"a0":0})", "--all"}).at("eigenvalues").size() == 8);

  const auto r = run_json({"recover-chi", "--g", "2", "--eigs", R"([{"p":"-2"},{"p":"-3/2"}])", "--weights",
                           R"({"mu":[0,0],"mu0":0})"});
  CHECK(r.at("sigma").at("text") == "1");
  CHECK(r.at("chi")[0].at("text") == "1");
}

TEST_CASE("slope and obstruction") {
  CHECK(run_json({"slope", "--family", "hilbert", "--input", R"({"k":[2],"w":0,"slopes":[1]})"}).at("noncritical") ==
        false);
  const auto g = run_json({"slope", "--family", "gsp", "--input",
                           R"({"weights":[{"mu":[3,1],"mu0":0}],"t":{"a":[0,0],"a0":-1},"slopes":[0],"twist_search":true})"});
  CHECK(g.at("rhs") == "0");
  CHECK(g.at("twist").get<long>() != 0);
  const auto o = run_json({"obstruction", "--exponents", "[3,2,1,0]", "--check-N", "60"});
  CHECK(o.at("orders") == json({1, 2, 3, 4}));
  CHECK(o.at("sufficient") == true);
}

TEST_CASE("linv") {
  const auto a = run_json({"linv", "--family", "hilbert", "--input",
                           R"({"direction":{"u":[1],"u0":-1},"places":[{"gradients":{"a_1":1}}]})"});
  CHECK(a.at("value") == "-2");
  const auto b = run_json({"linv", "--family", "gsp4_spin", "--compare-theorem", "B", "--input",
                           R"({"direction":{"u":[3,1],"u0":0},"places":[{"gradients":{"a_1":"1/2","a_2":2}}]})"});
  CHECK(b.at("classification").at("kind") == "sign_flip");
  CHECK(b.at("value") == "13/2");
  CHECK(b.at("theorem_value") == "-13/2");
}

TEST_CASE("error taxonomy") {
  const auto bad_json = run({"linv", "--family", "hilbert", "--input", "{not json"});
  CHECK(bad_json.code == symlinv::cli::kInputError);
  CHECK(error_of(bad_json).at("kind") == "json");
  CHECK(bad_json.out.empty());

  const auto singular = run({"linv", "--family", "hilbert", "--input",
                             R"({"direction":{"u":[1],"u0":0},"places":[{"gradients":{"a_1":1}},{"gradients":{"a_1":1},"direction":{"u":[0]}}]})"});
  CHECK(singular.code == symlinv::cli::kSingular);
  CHECK(error_of(singular).at("place") == 1);

  const auto domain = run({"cg", "--m", "2", "--n", "2", "--p", "3", "--u", "0", "--v", "0", "--w", "0"});
  CHECK(domain.code == symlinv::cli::kInputError);
  CHECK(error_of(domain).at("kind") == "domain");

  const auto usage = run({"nonsense"});
  CHECK(usage.code == symlinv::cli::kInputError);
  CHECK(error_of(usage).at("kind") == "usage");

  const auto csv = run({"hecke", "--g", "1", "--t", R"({"a":[0],"a0":0})", "--format", "csv"});
  CHECK(csv.code == symlinv::cli::kInputError);
  CHECK(error_of(csv).at("kind") == "unsupported_input");

  const auto pre = run({"phin", "--case", "steinberg", "--n", "2", "--D", "[0]", "--benois"});
  CHECK(pre.code == symlinv::cli::kInputError);
  CHECK(error_of(pre).at("kind") == "precondition");

  // Each error is a single line.
  CHECK(std::count(pre.err.begin(), pre.err.end(), '\n') == 1);
  CHECK(run({"--help"}).code == 0);
}
