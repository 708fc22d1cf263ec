#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "hyperknight/constructor.hpp"
#include "hyperknight/error.hpp"
#include "hyperknight/solver.hpp"
#include "hyperknight/tour_io.hpp"

using namespace hk;
using nlohmann::json;

namespace {

Tour solved(std::vector<int> dims, MoveParams mp = {}) {
  auto r = solve(BoardSpec(std::move(dims)), mp, {}, {});
  REQUIRE(r.tour);
  return *r.tour;
}

}  // namespace

TEST_SUITE("tour_io") {

TEST_CASE("json round trip") {
  for (const Tour& t : {solved({6, 6}), solved({4, 3, 2}), solved({10, 10}, MoveParams(3, 2)),
                        construct_nd(BoardSpec({2, 3, 4, 5}))}) {
    const std::string text = export_json(t, {{"generator", "test"}});
    const TourDocument doc = import_json(text);
    CHECK(doc.tour.board() == t.board());
    CHECK(doc.tour.moves() == t.moves());
    CHECK(cycle_equal(doc.tour, t));
    CHECK(std::equal(doc.tour.order().begin(), doc.tour.order().end(), t.order().begin()));
    CHECK(doc.metadata["generator"] == "test");
    const json j = json::parse(text);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["cycle"].size() == t.size());
  }
}

TEST_CASE("bad documents") {
  const std::string text = export_json(solved({6, 6}));
  CHECK_THROWS_AS(import_json(text.substr(0, text.size() / 2)), Error);
  try {
    import_json("{\"schema_version\": 99}");
    FAIL("accepted a bad schema");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Schema);
  }
  json j = json::parse(text);
  j["cycle"][3] = j["cycle"][2];
  try {
    import_json(j.dump());
    FAIL("accepted a duplicate cell");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Verification);
  }
  CHECK_NOTHROW(import_json(j.dump(), false));
  CHECK_THROWS_AS(export_json(import_json(j.dump(), false).tour), Error);
}

TEST_CASE("grid output") {
  const Tour t = solved({6, 6});
  const std::string grid = export_grid(t);
  std::istringstream in(grid);
  std::string line;
  std::set<int> seen;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int v = 0, cols = 0;
    while (row >> v) {
      seen.insert(v);
      ++cols;
    }
    CHECK(cols == 6);
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(seen.size() == 36);
  CHECK(*seen.begin() == 1);
  CHECK(*seen.rbegin() == 36);
  std::istringstream first(grid);
  int v = 0;
  first >> v;
  CHECK(v == static_cast<int>(std::find(t.order().begin(), t.order().end(), 0) - t.order().begin()) + 1);

  const std::string layered = export_grid(solved({4, 3, 2}));
  std::size_t blocks = 0;
  for (auto at = layered.find("layer "); at != std::string::npos; at = layered.find("layer ", at + 1)) {
    ++blocks;
  }
  CHECK(blocks == 2);
  CHECK_THROWS_AS(export_grid(construct_nd(BoardSpec({2, 3, 4, 5}))), Error);

  const Tour again = import_json(export_json(t)).tour;
  CHECK(export_grid(again) == grid);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperknight-io-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "t.json";
  const Tour t = solved({6, 6});
  write_text_file(path, export_json(t));
  CHECK(cycle_equal(import_json(read_text_file(path)).tour, t));
  CHECK_THROWS_AS(read_text_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

}
