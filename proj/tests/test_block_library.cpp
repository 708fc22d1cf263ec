#include <doctest.h>

#include <filesystem>

#include "hyperknight/block_library.hpp"
#include "hyperknight/error.hpp"
#include "hyperknight/sites.hpp"
#include "hyperknight/tour_io.hpp"

using namespace hk;

TEST_SUITE("block_library") {

TEST_CASE("every recipe derives a block that meets its checks") {
  BaseBlockLibrary lib;
  for (const BlockRecipe& r : block_recipes()) {
    CAPTURE(r.name);
    const Tour& t = lib.get(r.name);
    CHECK(block_satisfies(r, t));
    if (r.kind != BlockKind::ExtendingPattern) CHECK_FALSE(verify(t));
    if (r.kind == BlockKind::SeededClosed || r.kind == BlockKind::BisitedClosed) {
      CHECK(is_bisited(t));
    }
  }
  CHECK_THROWS_AS(block_recipe("no-such-block"), Error);
}

TEST_CASE("seed edges") {
  const auto e = seed_edges(6, 6);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == CellEdge{{1, 4}, {2, 6}});
  CHECK(e[1] == CellEdge{{4, 1}, {6, 2}});
  BaseBlockLibrary lib;
  CHECK(is_seeded(lib.get(seeded_block_name(6, 6))));
  CHECK(has_edge(lib.get(seeded_block_name(6, 6)), {2, 6}, {1, 4}));
}

TEST_CASE("block directory round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperknight-blocks-test";
  std::filesystem::remove_all(dir);
  const auto names = BaseBlockLibrary::regenerate(dir, seeded_block_name(6, 6));
  CHECK(names == std::vector<std::string>{seeded_block_name(6, 6)});
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  const auto manifest = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
  CHECK(manifest.dump().find(seeded_block_name(6, 6)) != std::string::npos);

  BaseBlockLibrary stored(dir);
  BaseBlockLibrary fresh;
  CHECK(cycle_equal(stored.get(seeded_block_name(6, 6)), fresh.get(seeded_block_name(6, 6))));

  // A corrupted file is ignored and the block is derived again.
  write_text_file(dir / (seeded_block_name(6, 6) + ".json"), "{ broken");
  BaseBlockLibrary damaged(dir);
  CHECK(is_seeded(damaged.get(seeded_block_name(6, 6))));
  CHECK_THROWS_AS(BaseBlockLibrary::regenerate(dir, std::string("nope")), Error);
  std::filesystem::remove_all(dir);
}

}
