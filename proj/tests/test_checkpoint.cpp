#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "expdioph/checkpoint.hpp"
#include "expdioph/search.hpp"

using namespace expdioph;
namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "expdioph_ckpt_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p.string();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream(path, std::ios::binary) << body;
}

}  // namespace

TEST_CASE("line format") {
  const std::string l = checkpoint_line({{2, 1, 2}, {{2, 1, 1, 2, 2}}, 5});
  CHECK(l == R"({"a":2,"elapsed_ms":5,"found":[[2,1,1,2,2]],"m":1,"status":"done","y":2})");
}

TEST_CASE("round trip") {
  const auto p = tmp_path("rt.jsonl");
  {
    CheckpointWriter w(p, 0);
    w.append({{4, 2, 2}, {}, 1});
    w.append({{2, 1, 2}, {{2, 1, 1, 2, 2}}, 2});
  }
  const auto st = checkpoint_load(p);
  REQUIRE(st.done.size() == 2);
  CHECK(st.done.at({2, 1, 2}).found == std::vector<FamilyTuple>{{2, 1, 1, 2, 2}});
  CHECK(st.done.at({4, 2, 2}).found.empty());
  CHECK(st.valid_bytes == fs::file_size(p));
  CHECK_FALSE(st.dropped_partial_line);
}

TEST_CASE("missing and empty files") {
  const auto p = tmp_path("empty.jsonl");
  CHECK(checkpoint_load(p).done.empty());
  write_file(p, "");
  CHECK(checkpoint_load(p).done.empty());
}

TEST_CASE("partial trailing line is dropped and truncated") {
  const auto p = tmp_path("partial.jsonl");
  const std::string good = checkpoint_line({{4, 2, 2}, {}, 1}) + "\n";
  write_file(p, good + R"({"a":6,"m":3,"y")");
  auto st = checkpoint_load(p);
  CHECK(st.done.size() == 1);
  CHECK(st.dropped_partial_line);
  CHECK(st.valid_bytes == good.size());
  {
    CheckpointWriter w(p, st.valid_bytes);
    w.append({{6, 3, 2}, {}, 1});
  }
  st = checkpoint_load(p);
  CHECK(st.done.size() == 2);
  CHECK_FALSE(st.dropped_partial_line);
}

TEST_CASE("corrupt lines name the line") {
  const auto p = tmp_path("corrupt.jsonl");
  const std::string good = checkpoint_line({{4, 2, 2}, {}, 1}) + "\n";
  write_file(p, good + "not json\n");
  CHECK_THROWS_WITH_AS(checkpoint_load(p), doctest::Contains("corrupt line 2"), std::runtime_error);
  write_file(p, good + good);
  CHECK_THROWS_WITH_AS(checkpoint_load(p), doctest::Contains("corrupt line 2"), std::runtime_error);
  write_file(p, checkpoint_line({{2, 1, 1}, {{2, 1, 1, 1, 1}}, 1}) + "\n");
  CHECK_THROWS_WITH_AS(checkpoint_load(p), doctest::Contains("corrupt line 1"), std::runtime_error);
  write_file(p, R"({"a":4,"m":2,"y":2,"status":"running","found":[],"elapsed_ms":0})" "\n");
  CHECK_THROWS_AS(checkpoint_load(p), std::runtime_error);
}

TEST_CASE("interrupted run resumes to the same report") {
  const BoundSet& b = build_bound_set();
  const auto p = tmp_path("resume.jsonl");
  const auto full = report_to_json(theorem_search(b, 8), true).dump();

  SearchOptions opts;
  opts.checkpoint = p;
  opts.max_new_units = 3;
  const auto part = theorem_search(b, 8, opts);
  CHECK(part.units_done == 3);
  CHECK(part.units_done < part.units_total);

  // simulate a kill in the middle of a write
  std::ofstream(p, std::ios::app) << R"({"a":1)";

  opts.max_new_units.reset();
  opts.threads = 3;
  const auto resumed = theorem_search(b, 8, opts);
  CHECK(resumed.units_done == resumed.units_total);
  CHECK(report_to_json(resumed, true).dump() == full);
  CHECK(checkpoint_load(p).done.size() == resumed.units_total);

  // a second resume has nothing left to do
  const auto again = theorem_search(b, 8, opts);
  CHECK(report_to_json(again, true).dump() == full);
}
