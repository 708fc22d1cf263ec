#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperknight/board.hpp"
#include "hyperknight/error.hpp"

using namespace hk;

namespace {

// Every delta in [-a, a]^k checked against the definition directly.
std::size_t brute_move_count(std::size_t k, int a, int b) {
  std::size_t count = 0;
  std::vector<int> d(k, -a);
  for (;;) {
    int nonzero = 0;
    int big = 0;
    int small = 0;
    for (int v : d) {
      if (v == 0) continue;
      ++nonzero;
      if (std::abs(v) == a) ++big;
      if (std::abs(v) == b) ++small;
    }
    if (nonzero == 2 && big == 1 && small == 1) ++count;
    std::size_t i = 0;
    while (i < k && d[i] == a) d[i++] = -a;
    if (i == k) break;
    ++d[i];
  }
  return count;
}

// Union-find over all cell pairs, independent of MoveGraph.
bool connected_by_union_find(const BoardSpec& b, const MoveParams& mp) {
  const CellId n = b.cell_count();
  std::vector<CellId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](CellId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (CellId x = 0; x < n; ++x) {
    for (CellId y = x + 1; y < n; ++y) {
      if (is_edge(b, b.cell_at(x), b.cell_at(y), mp)) parent[find(x)] = find(y);
    }
  }
  std::set<CellId> roots;
  for (CellId x = 0; x < n; ++x) roots.insert(find(x));
  return roots.size() == 1;
}

}  // namespace

TEST_SUITE("board") {

TEST_CASE("board indexing round-trips") {
  BoardSpec b({3, 4, 2});
  CHECK(b.cell_count() == 24);
  for (CellId id = 0; id < b.cell_count(); ++id) {
    const Cell c = b.cell_at(id);
    CHECK(b.contains(c));
    CHECK(b.index_of(c) == id);
    for (std::size_t i = 0; i < b.rank(); ++i) CHECK(b.coord(id, i) == c[i]);
  }
  CHECK_FALSE(b.contains(Cell{0, 1, 1}));
  CHECK_FALSE(b.contains(Cell{3, 5, 1}));
  CHECK_THROWS_AS(BoardSpec({}), Error);
  CHECK_THROWS_AS(BoardSpec({3, 0}), Error);
}

TEST_CASE("move params normalize and reject bad pairs") {
  MoveParams mp(1, 2);
  CHECK(mp.alpha() == 2);
  CHECK(mp.beta() == 1);
  CHECK(mp.classical());
  CHECK_THROWS_AS(MoveParams(2, 2), Error);
  CHECK_THROWS_AS(MoveParams(0, 1), Error);
}

TEST_CASE("move set sizes") {
  CHECK(move_set(2, {}).size() == 8);
  CHECK(move_set(3, {}).size() == 24);
  CHECK(move_set(4, MoveParams(3, 2)).size() == 48);
  for (std::size_t k = 2; k <= 5; ++k) {
    for (auto [a, b] : {std::pair{2, 1}, {3, 2}, {4, 1}}) {
      CHECK(move_set(k, MoveParams(a, b)).size() == brute_move_count(k, a, b));
    }
  }
  CHECK_THROWS_AS(move_set(1, {}), Error);
  const auto moves = move_set(3, {});
  CHECK(std::is_sorted(moves.begin(), moves.end()));
  for (const auto& m : moves) CHECK(is_move_vector(m.delta, {}));
}

TEST_CASE("edge relation") {
  BoardSpec b3({3, 3});
  CHECK(is_edge(b3, Cell{1, 1}, Cell{2, 3}));
  CHECK_FALSE(is_edge(b3, Cell{1, 1}, Cell{1, 2}));
  CHECK_THROWS_AS(is_edge(b3, Cell{1, 1}, Cell{1, 2, 1}), Error);
  BoardSpec cube({3, 3, 3});
  for (CellId id = 0; id < cube.cell_count(); ++id) {
    CHECK_FALSE(is_edge(cube, Cell{2, 2, 2}, cube.cell_at(id)));
  }
}

TEST_CASE("neighbours agree with the edge relation") {
  CHECK(neighbors(BoardSpec({3, 3, 3}), Cell{2, 2, 2}).empty());
  const auto corner = neighbors(BoardSpec({8, 8}), Cell{1, 1});
  CHECK(std::set<Cell>(corner.begin(), corner.end()) == std::set<Cell>{{2, 3}, {3, 2}});
  CHECK(neighbors(BoardSpec({5, 5}), Cell{3, 3}).size() == 8);

  for (auto dims : {std::vector<int>{5, 6}, {3, 4, 5}, {2, 3, 3, 2}}) {
    for (MoveParams mp : {MoveParams(2, 1), MoveParams(3, 2)}) {
      BoardSpec b(dims);
      MoveGraph g(b, mp);
      for (CellId x = 0; x < b.cell_count(); ++x) {
        std::set<CellId> expected;
        for (CellId y = 0; y < b.cell_count(); ++y) {
          if (is_edge(b, x, y, mp)) expected.insert(y);
        }
        std::set<CellId> got;
        g.for_each_neighbor(x, [&](CellId y) { got.insert(y); });
        CHECK(got == expected);
        CHECK(g.degree(x) == expected.size());
        std::set<CellId> listed;
        for (const Cell& c : neighbors(b, b.cell_at(x), mp)) listed.insert(b.index_of(c));
        CHECK(listed == expected);
      }
    }
  }
}

TEST_CASE("colour") {
  CHECK(color(Cell{1, 1}) == -1);
  CHECK(color(Cell{2, 3}) == 1);
  CHECK(color(Cell{1, 6}) == 1);
  BoardSpec b({4, 5, 3});
  for (CellId x = 0; x < b.cell_count(); ++x) {
    for (const Cell& y : neighbors(b, b.cell_at(x))) {
      CHECK(color(b.cell_at(x)) != color(y));
    }
  }
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(BoardSpec({2, 2, 2})));
  CHECK_FALSE(is_connected(BoardSpec({3, 3, 3})));
  CHECK(is_connected(BoardSpec({6, 5}), MoveParams(3, 2)));
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 6; ++n) {
      for (MoveParams mp : {MoveParams(2, 1), MoveParams(3, 1), MoveParams(3, 2)}) {
        BoardSpec b({m, n});
        CHECK(is_connected(b, mp) == connected_by_union_find(b, mp));
      }
    }
  }
  for (auto dims : {std::vector<int>{2, 2, 3}, {2, 3, 3}, {2, 2, 2, 2}, {3, 3, 2}}) {
    BoardSpec b(dims);
    CHECK(is_connected(b) == connected_by_union_find(b, {}));
  }
}

TEST_CASE("canonicalize") {
  const auto c = canonicalize(BoardSpec({4, 2, 3}));
  CHECK(c.board == BoardSpec({2, 3, 4}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(c.board.dim(i) == std::vector<int>{4, 2, 3}[c.perm[i]]);
  const auto same = canonicalize(BoardSpec({6, 6}));
  CHECK(same.board == BoardSpec({6, 6}));
  CHECK(same.perm == std::vector<std::size_t>{0, 1});
}

}
