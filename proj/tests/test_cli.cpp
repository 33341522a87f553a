#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"

namespace fs = std::filesystem;
using expdioph::cli::run;

namespace {

struct Out {
  int code;
  std::string out;
  std::string err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "expdioph_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(call({"check", "2", "1", "2", "1", "3"}).code == 0);
  CHECK(call({"check", "2", "1", "1", "2", "2"}).code == 0);
  CHECK(call({"check", "2", "1", "1", "1", "1"}).code == 10);
  CHECK(call({"check", "1", "1", "1", "1", "1"}).code == 2);
  CHECK(call({"check", "2", "1", "x", "1", "1"}).code == 2);
  CHECK(call({"check", "2", "1"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  const auto r = call({"check", "4", "2", "1", "2", "3"});
  CHECK(r.code == 10);
  CHECK(r.out.find("excluded by z_parity") != std::string::npos);
}

TEST_CASE("bounds") {
  const auto r = call({"bounds"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"s_max_coarse\": 5040") != std::string::npos);
  CHECK(r.out.find("\"A_max_refined\": 5044") != std::string::npos);
  CHECK(r.out.find("\"y_cap_final\": 10") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("bounds_version") == "expdioph-bounds-1");
}

TEST_CASE("search oracle") {
  auto r = call({"search", "oracle", "--a-max", "12", "--m-max", "12", "--exp-max", "16"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("solutions") == nlohmann::json::parse("[[2,1,1,2,2],[2,1,2,1,3]]"));
  for (const char* k : {"equation", "region", "bounds_version", "units_done", "units_total", "wall_ms"})
    CHECK(j.contains(k));
  CHECK(call({"search", "oracle", "--a-max", "12"}).code == 2);
  CHECK(call({"search", "nonsense"}).code == 2);

  r = call({"search", "oracle", "--a-max", "4", "--m-max", "2", "--exp-max", "4", "--format", "csv"});
  CHECK(r.out == "a,m,x,y,z\n2,1,1,2,2\n2,1,2,1,3\n");
  CHECK(call({"search", "oracle", "--a-max", "4", "--m-max", "2", "--exp-max", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("reports are byte-identical apart from timing") {
  const auto d = scratch();
  const std::vector<std::string> base = {"search", "corollary", "--b-max", "101", "--exp-max", "30", "--out"};
  auto a1 = base, a2 = base;
  a1.push_back((d / "r1.json").string());
  a2.push_back((d / "r2.json").string());
  REQUIRE(call(a1).code == 0);
  REQUIRE(call(a2).code == 0);
  auto j1 = nlohmann::json::parse(slurp(d / "r1.json"));
  auto j2 = nlohmann::json::parse(slurp(d / "r2.json"));
  CHECK(j1.at("solutions") == nlohmann::json::parse("[[5,1,2,2],[5,2,1,3]]"));
  j1.erase("wall_ms");
  j2.erase("wall_ms");
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("search corollary and theorem") {
  const auto r = call({"search", "corollary", "--b-max", "501", "--exp-max", "60"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("solutions").size() == 2);
  CHECK(call({"search", "corollary", "--b-max", "500"}).code == 2);
  CHECK(call({"search", "corollary"}).code == 2);
  CHECK(call({"search", "theorem"}).code == 2);
  CHECK(call({"search", "theorem", "--y", "11"}).code == 2);
  CHECK(call({"search", "theorem", "--y", "1"}).code == 2);
  CHECK(call({"search", "theorem", "--y", "10", "--threads", "0"}).code == 2);

  const auto d = scratch();
  const auto ck = d / "y10.jsonl";
  fs::remove(ck);
  const auto t = call({"search", "theorem", "--y", "10", "--checkpoint", ck.string(), "--threads", "2"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out).at("solutions").empty());
  CHECK(fs::file_size(ck) > 0);

  // checkpoint corruption is an internal error, not a usage error
  std::ofstream(ck, std::ios::trunc) << "garbage\n";
  CHECK(call({"search", "theorem", "--y", "10", "--checkpoint", ck.string()}).code == 1);
}

TEST_CASE("default checkpoint directory from the environment") {
  const char* dir = std::getenv("EXPDIOPH_CKPT_DIR");
  if (dir == nullptr) return;
  fs::remove(fs::path(dir) / "theorem_y9.jsonl");
  REQUIRE(call({"search", "theorem", "--y", "9"}).code == 0);
  CHECK(fs::exists(fs::path(dir) / "theorem_y9.jsonl"));
}

TEST_CASE("verify-aux") {
  auto r = call({"verify-aux", "le"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 solution(s)") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = call({"verify-aux", "trivial-eq1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("UNCLASSIFIED") == std::string::npos);
  CHECK(call({"verify-aux", "na53", "--exp-max", "200"}).code == 0);
  CHECK(call({"verify-aux", "foo"}).code == 2);
  CHECK(call({"verify-aux"}).code == 2);
  // the published list for terai4 is empty, but 7^2 + 2^5 = 3^4
  r = call({"verify-aux", "terai4", "--base-max", "10"});
  CHECK(r.code == 3);
  CHECK(r.out.find("(7, 2, 3, 5)") != std::string::npos);
}
