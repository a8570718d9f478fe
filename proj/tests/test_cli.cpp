#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "toricflow/cli.hpp"

using namespace toricflow;
using namespace fixture;

namespace {

Json orthant_job(const std::string& task) {
  Json j = Json::parse(R"({
    "cone": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
    "curves": {"c1": [["0","1"], ["0","1","1"], ["0","0","0","1"], ["2","1"]]},
    "options": {"seed": 42, "root_bound": 2, "ext_bound": 16}
  })");
  j["task"] = task;
  return j;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const Json& job, cli::Overrides o = {}) {
  std::ostringstream out, err;
  int code = cli::run_job(job, o, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "toricflow_test_" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run(orthant_job("analyze"));
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("group order 1, smooth in codim 4") != std::string::npos);

  Json five = Json::parse(R"({"cone": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[-1,-1,-2,5]], "task": "analyze"})");
  auto f = run(five);
  CHECK(f.code == cli::kSuccess);
  CHECK(f.out.find("group order 5, smooth in codim 3") != std::string::npos);
  CHECK(f.out.find("character weights (1,1,2,1) mod 5") != std::string::npos);
  CHECK(f.out.find("irregular 2-faces none") != std::string::npos);

  Json dep = Json::parse(R"({"cone": [[1,0,0,0],[2,0,0,0],[0,1,0,0],[0,0,1,0]], "task": "analyze"})");
  auto d = run(dep);
  CHECK(d.code == cli::kInputError);
  CHECK(d.err.find("rays dependent") != std::string::npos);
}

TEST_CASE("schema errors carry a location") {
  auto bad_cone = run(Json::parse(R"({"cone": [[1,0],[0,"x"]]})"));
  CHECK(bad_cone.code == cli::kInputError);
  CHECK(bad_cone.err.find("/cone/1/1") != std::string::npos);

  Json job = orthant_job("straighten");
  job["curves"]["c1"][2] = Json::array({"1/0"});
  auto r = run(job);
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("/curves/c1/2/0") != std::string::npos);

  Json wrong_rank = orthant_job("straighten");
  wrong_rank["curves"]["c1"].erase(3);
  CHECK(run(wrong_rank).code == cli::kInputError);

  Json task = orthant_job("dance");
  auto t = run(task);
  CHECK(t.code == cli::kInputError);
  CHECK(t.err.find("/task") != std::string::npos);

  Json floats = orthant_job("straighten");
  floats["curves"]["c1"][0] = Json::array({0.5, 1});
  CHECK(run(floats).code == cli::kInputError);
}

TEST_CASE("roots") {
  auto r = run(orthant_job("roots"), cli::Overrides{.root_bound = 1u});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("ray 1 (8 roots with height bound 1)") != std::string::npos);
}

TEST_CASE("certify") {
  auto r = run(orthant_job("certify"));
  // the A4 fixture shares a zero at t = 0, so the strict certificate fails
  CHECK(r.code == cli::kHypothesisViolation);
  auto j = Json::parse(r.out);
  CHECK(j["c1"]["in_regular_locus"] == false);
  CHECK(j["c1"]["in_regular_part"] == true);

  Json good = orthant_job("certify");
  good["curves"]["c1"] = Json::parse(R"([["0","1"], ["1","1"], ["2","1"], ["3","0","1"]])");
  CHECK(run(good).code == cli::kSuccess);
}

TEST_CASE("straighten, emit and verify") {
  const std::string path = temp_path("word");
  auto r = run(orthant_job("straighten"), cli::Overrides{.emit = path});
  REQUIRE(r.code == cli::kSuccess);
  auto report = Json::parse(r.out);
  CHECK(report["verified"] == true);
  CHECK(report["outcome"] == "success");

  std::string bytes = slurp(path);
  Json word = Json::parse(bytes);
  std::ostringstream out, err;
  CHECK(cli::run_verify(orthant_job("straighten"), word, out, err) == cli::kSuccess);
  CHECK(out.str() == "PASS\n");

  // round trip through the parser is byte-identical
  auto p = QuotientPresentation::build(orthant(4));
  CHECK(canonical_dump(word_file_to_json(word_file_from_json(word, p))) == bytes);

  // a tampered image fails verification
  Json tampered = word;
  tampered["image"][0][0] = "12345";
  std::ostringstream out2, err2;
  CHECK(cli::run_verify(orthant_job("straighten"), tampered, out2, err2) == cli::kHypothesisViolation);
  CHECK(out2.str() == "FAIL\n");

  // a tampered root is rejected as input
  Json bad_root = word;
  bad_root["steps"][0]["root"] = Json::array({1, 0, 0, 0});
  std::ostringstream out3, err3;
  CHECK(cli::run_verify(orthant_job("straighten"), bad_root, out3, err3) == cli::kInputError);
  std::remove(path.c_str());
}

TEST_CASE("identical job and seed give identical transcripts") {
  auto a = run(orthant_job("straighten"));
  auto b = run(orthant_job("straighten"));
  CHECK(a.out == b.out);
  auto c = run(orthant_job("straighten"), cli::Overrides{.seed = 43u});
  CHECK(c.code == cli::kSuccess);
  CHECK(a.out != c.out);
}

TEST_CASE("broken curve is a hypothesis violation") {
  Json job = orthant_job("straighten");
  job["curves"]["c1"] = Json::parse(R"([["0","1"], ["0","1"], ["1"], ["1"]])");
  auto r = run(job);
  CHECK(r.code == cli::kHypothesisViolation);
  CHECK(Json::parse(r.out)["diagnostic"].get<std::string>().find("share a zero") != std::string::npos);
}

TEST_CASE("bound exhaustion") {
  // With max_words tiny, every extension reports an oversized word set and
  // the embedding checks stay undecided.
  Json job = orthant_job("straighten");
  job["curves"]["c1"] = Json::parse(R"([["0","1"], ["1","0","1"], ["2","1","0","1"], ["3","1","0","0","1"]])");
  job["options"]["max_words"] = 3;
  auto r = run(job);
  CHECK(r.code == cli::kBoundExhausted);
  CHECK_MESSAGE(r.err.empty(), r.err);
}

TEST_CASE("extend") {
  Json job = orthant_job("extend");
  job["curves"] = Json::parse(R"({
    "c1": [["0","1"], ["0","0","1"], ["0","0","0","1"], ["1","1"]],
    "c2": [["0","1","2"], ["0","0","1"], ["0","0","1","2"], ["1","1","1/2","2","2"]]
  })");
  const std::string path = temp_path("extend");
  auto r = run(job, cli::Overrides{.emit = path});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(Json::parse(r.out)["verified"] == true);
  std::ostringstream out, err;
  CHECK(cli::run_verify(job, Json::parse(slurp(path)), out, err) == cli::kSuccess);
  std::remove(path.c_str());
}
