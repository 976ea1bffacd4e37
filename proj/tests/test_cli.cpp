#include <sstream>

#include <json.hpp>

#include "corelate/cli.hpp"
#include "support.hpp"

using namespace corelate;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--theory", "er", "unit ; counit"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "corelation 0 -> 0 : {}\n");
  r = run({"eval", "--theory", "er", "unit ; mult"});
  CHECK(r.code == kExitUser);
  CHECK(r.err.find("TypeError") != std::string::npos);
  CHECK(r.err.find("1 vs 2") != std::string::npos);
  r = run({"eval", "--theory", "q-subspace", "scalar(2);coscalar(2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "subspace 1 -> 1 : [[1,1]]\n");
  CHECK(run({"eval", "--theory", "er", "b.mult"}).code == kExitUser);
  CHECK(run({"eval", "--theory", "nope", "id(1)"}).code == kExitUser);
  CHECK(run({"eval", "--theory", "er", "(mult"}).code == kExitUser);
  // Default theory is er.
  CHECK(run({"eval", "comult ; mult"}).out == "corelation 1 -> 1 : {{x0,y0}}\n");
}

TEST_CASE("equal") {
  CHECK(run({"equal", "--theory", "z-corel", "scalar(2);coscalar(2)", "id(1)"}).code == kExitUnequal);
  CHECK(run({"equal", "--theory", "q-subspace", "scalar(2);coscalar(2)", "id(1)"}).code == kExitOk);
  CHECK(run({"equal", "--theory", "er", "mult;comult", "id(1)@comult;mult@id(1)"}).code == kExitOk);
  CHECK(run({"equal", "--theory", "er", "mult", "id(1)"}).code == kExitUser);
  CHECK(run({"equal", "--theory", "er", "mult"}).code == kExitUser);
}

TEST_CASE("compose and normalize") {
  auto r = run({"normalize", "--C", "f", "fn 3 -> 2 : [1,1,0]"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "epi = fn 3 -> 2 : [1,1,0]\nmono = fn 2 -> 2 : [0,1]\n");
  r = run({"normalize", "--C", "f", "cospan { left = fn 1 -> 2 : [1], right = fn 1 -> 2 : [0] }"});
  CHECK(r.out == "cospan { left = fn 1 -> 2 : [0], right = fn 1 -> 2 : [1] }\n");
  r = run({"normalize", "--C", "f", "--as", "corel", "cospan { left = fn 1 -> 2 : [0], right = fn 1 -> 2 : [0] }"});
  CHECK(r.out == "corelation 1 -> 1 : {{x0,y0}}\n");
  r = run({"compose", "--C", "f", "cospan { left = fn 2 -> 1 : [0,0], right = fn 1 -> 1 : [0] }",
           "cospan { left = fn 1 -> 1 : [0], right = fn 2 -> 1 : [0,0] }"});
  CHECK(r.out == "cospan { left = fn 2 -> 1 : [0,0], right = fn 2 -> 1 : [0,0] }\n");
  r = run({"compose", "--C", "gf2", "--as", "rel", "span { left = mat gf2 1x1 : [[1]], right = mat gf2 1x1 : [[0]] }",
           "span { left = mat gf2 1x1 : [[1]], right = mat gf2 1x1 : [[1]] }"});
  CHECK(r.out == "subspace 1 -> 1 : [[1,0]]\n");
  CHECK(run({"compose", "--C", "f", "fn 1 -> 2 : [0]", "fn 2 -> 1 : [0,0]"}).out == "fn 1 -> 1 : [0]\n");
  CHECK(run({"compose", "--C", "f", "fn 1 -> 2 : [0]", "fn 1 -> 1 : [0]"}).code == kExitUser);
  CHECK(run({"normalize", "--C", "z", "--as", "pi", "--A", "split-mono",
             "span { left = mat z 1x1 : [[2]], right = mat z 1x1 : [[1]] }"})
            .code == kExitUser);
  CHECK(run({"normalize", "--C", "z", "--as", "rel", "span { left = mat z 1x1 : [[1]], right = mat z 1x1 : [[1]] }"})
            .code == kExitUser);
  CHECK(run({"normalize", "--C", "f", "fn 2 -> 2 : [0]"}).code == kExitUser);
}

TEST_CASE("check exit codes") {
  auto r = run({"check", "assumption31", "--C", "f", "--A", "inj", "--bound", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find(": PASS (") != std::string::npos);
  // Expected-fail mode: the known counterexample is found.
  r = run({"check", "assumption31", "--C", "f", "--A", "f", "--bound", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("counterexample: cospan { left = fn 0 -> 1 : [], right = fn 2 -> 1 : [0,0] }") != std::string::npos);
  CHECK(r.out.find("expected fail: ok") != std::string::npos);
  CHECK(run({"check", "assumption31", "--C", "f", "--A", "f", "--bound", "2", "--expect", "pass"}).code ==
        kExitUnexpected);
  CHECK(run({"check", "square", "--C", "f", "--A", "inj", "--expect", "fail"}).code == kExitUnexpected);
  CHECK(run({"check", "frobenius", "--theory", "z-corel"}).code == kExitOk);
  CHECK(run({"check", "nonsense"}).code == kExitUser);
  CHECK(run({"check", "subspace-oracle", "--C", "z"}).code == kExitUser);
  CHECK(run({"check", "square", "--format", "xml"}).code == kExitUser);
  CHECK(run({"check", "square", "--bound", "-1"}).code == kExitUser);
  CHECK(run({"bogus"}).code == kExitUser);
  CHECK(run({}).code == kExitUser);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("records are deterministic") {
  std::vector<std::string> args{"check", "tensor", "--C", "pf", "--samples", "60", "--seed", "4", "--format", "records"};
  auto a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["name"] == "tensor");
  CHECK(j["seed"] == 4);
  CHECK(j["verdict"] == "fail");
  CHECK(j["expected"] == "fail");
  CHECK_FALSE(j["counterexamples"].empty());
  auto c = run({"check", "tensor", "--C", "pf", "--samples", "60", "--seed", "5", "--format", "records"});
  CHECK(c.out != a.out);
  auto w = run({"check", "witness", "--C", "f", "--bound", "1", "--format", "records"});
  CHECK(w.out ==
        "{\"record\":\"check\",\"name\":\"witness\",\"ambient\":\"F\",\"subcategory\":\"Inj\",\"bound\":1,"
        "\"entry_bound\":3,\"seed\":0,\"exhaustive\":true,\"cases\":284,\"failures\":0,\"verdict\":\"pass\","
        "\"counterexamples\":[],\"expected\":\"pass\"}\n");
}
