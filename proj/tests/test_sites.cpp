#include <doctest.h>

#include <set>
#include <tuple>

#include "hyperknight/error.hpp"
#include "hyperknight/sites.hpp"
#include "hyperknight/solver.hpp"

using namespace hk;

namespace {

using Key = std::tuple<std::size_t, std::size_t, int, Orientation>;

// Definition check over every edge pair, straight from coordinates.
std::set<Key> brute_sites(const Tour& t, int d) {
  const BoardSpec& b = t.board();
  auto offset_axis = [&](CellId x, CellId y) {
    int axis = -1;
    for (std::size_t i = 0; i < b.rank(); ++i) {
      const int diff = b.coord(x, i) - b.coord(y, i);
      if (diff == 0) continue;
      if (std::abs(diff) != d || axis >= 0) return -1;
      axis = static_cast<int>(i);
    }
    return axis;
  };
  std::set<Key> out;
  for (std::size_t n = 0; n < t.size(); ++n) {
    for (std::size_t m = n + 1; m < t.size(); ++m) {
      const CellId a0 = t.at(n), a1 = t.next(n), b0 = t.at(m), b1 = t.next(m);
      const int w1 = offset_axis(a1, b0), w2 = offset_axis(b1, a0);
      if (w1 >= 0 && w1 == w2) out.insert({n, m, d, Orientation::Well});
      const int n1 = offset_axis(b0, a0), n2 = offset_axis(b1, a1);
      if (n1 >= 0 && n1 == n2) out.insert({n, m, d, Orientation::NonWell});
    }
  }
  return out;
}

std::set<Key> keys(const std::vector<Site>& sites) {
  std::set<Key> out;
  for (const Site& s : sites) out.insert({s.pos_n, s.pos_m, s.magnitude, s.orientation});
  return out;
}

Tour found(const BoardSpec& b, MoveParams mp = {}, std::uint64_t seed = 1) {
  SearchBudget budget;
  budget.seed = seed;
  auto r = solve(b, mp, {}, budget);
  REQUIRE(r.tour);
  return *r.tour;
}

}  // namespace

TEST_SUITE("sites") {

TEST_CASE("hand-made well-oriented parallel pattern") {
  // (1,1)->(2,3) then (4,3)->(3,1): a^m - a^{n+1} = 2 e_1.
  const BoardSpec b({4, 3});
  const Tour t = Tour::from_cells(b, {}, std::vector<Cell>{{1, 1}, {2, 3}, {4, 3}, {3, 1}}, true);
  const auto s = site_at(t, 0, 2, 2);
  REQUIRE(s);
  CHECK(s->kind == SiteKind::WOPP);
  CHECK(s->orientation == Orientation::Well);
  CHECK(s->axis == 0);
  const auto all = find_sites(t, 2);
  REQUIRE(all.size() >= 1);
  CHECK(all.front() == *s);
  const auto pairs = s->pairing();
  for (auto [x, y] : pairs) CHECK(std::abs(b.coord(x, 0) - b.coord(y, 0)) == 2);
}

TEST_CASE("site scan agrees with the definition") {
  for (auto dims : {std::vector<int>{6, 6}, {5, 6}, {3, 10}, {4, 3, 2}, {3, 3, 4}}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const Tour t = found(BoardSpec(dims), {}, seed);
      CHECK(keys(find_sites(t, 2)) == brute_sites(t, 2));
      CHECK(keys(find_sites(t, 1)) == brute_sites(t, 1));
      std::set<Key> both = brute_sites(t, 2);
      both.merge(brute_sites(t, 1));
      CHECK(keys(find_sites(t)) == both);
      for (const Site& s : find_sites(t, 2)) {
        auto again = site_at(t, s.pos_n, s.pos_m, 2);
        REQUIRE(again);
        CHECK(again->support == s.support);
      }
    }
  }
}

TEST_CASE("generalized tours report alpha and beta sites") {
  const Tour t = found(BoardSpec({10, 10}), MoveParams(3, 2));
  const auto sites = find_sites(t);
  bool alpha = false, beta = false;
  for (const Site& s : sites) {
    alpha |= s.kind == SiteKind::AlphaSite && s.magnitude == 3;
    beta |= s.kind == SiteKind::BetaSite && s.magnitude == 2;
  }
  CHECK(alpha);
  CHECK(beta);
  CHECK(keys(find_sites(t, 3)) == brute_sites(t, 3));
  CHECK(keys(find_sites(t, 2)) == brute_sites(t, 2));
}

TEST_CASE("disjoint pairs") {
  CHECK_FALSE(disjoint_site_pair(std::vector<Site>{}));
  const Site a{SiteKind::WOPP, Orientation::Well, 0, 2, 0, 2, {0, 1, 2, 3}};
  const Site b{SiteKind::WOPP, Orientation::Well, 3, 5, 0, 2, {3, 4, 5, 6}};
  const Site c{SiteKind::WOPP, Orientation::Well, 7, 9, 0, 2, {7, 8, 9, 10}};
  CHECK_FALSE(supports_disjoint(a, b));
  CHECK_FALSE(disjoint_site_pair(std::vector<Site>{a, b}));
  auto p = disjoint_site_pair(std::vector<Site>{a, b, c});
  REQUIRE(p);
  CHECK(p->first == a);
  CHECK(p->second == c);
}

TEST_CASE("bi-sited tours") {
  const Tour t = found(BoardSpec({6, 6}));
  CHECK(is_bisited(t));
  CHECK(disjoint_site_pair(find_sites(t, 2)));
  // Four cells cannot hold two disjoint sites.
  const Tour toy = Tour::from_cells(BoardSpec({4, 3}), {},
                                    std::vector<Cell>{{1, 1}, {2, 3}, {4, 3}, {3, 1}}, true);
  CHECK_FALSE(is_bisited(toy));
  CHECK_THROWS_AS(find_sites(Tour(BoardSpec({4, 3}), {}, {0, 5}, false)), Error);
}

}
