// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hyperknight/block_library.hpp"
#include "hyperknight/constructor.hpp"
#include "hyperknight/feasibility.hpp"
#include "hyperknight/solver.hpp"

using namespace hk;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string dims_text(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "x" : "") + std::to_string(d[i]);
  return s;
}

// Calls f on every tuple of `rank` values in [lo, hi].
void for_each_tuple(std::size_t rank, int lo, int hi,
                    const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> d(rank, lo);
  for (;;) {
    f(d);
    std::size_t i = 0;
    while (i < rank && d[i] == hi) d[i++] = lo;
    if (i == rank) return;
    ++d[i];
  }
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  int boards = 0;
  int mismatches = 0;
  double worst = 0;
  std::string first_bad;
  SearchBudget budget;
  budget.time_limit = std::chrono::seconds(60);
  auto check = [&](const std::vector<int>& d) {
    const BoardSpec b(d);
    const auto s0 = Clock::now();
    const SearchResult r = solve(b, {}, {}, budget);
    worst = std::max(worst, seconds_since(s0));
    const bool tourable = classify_nd(b).tourable;
    const bool agree = r.status != SearchStatus::Exhausted &&
                       (r.status == SearchStatus::Found) == tourable &&
                       (!r.tour || !verify(*r.tour));
    ++boards;
    if (!agree) {
      ++mismatches;
      if (first_bad.empty()) first_bad = dims_text(d);
    }
  };
  for (std::size_t rank = 2; rank <= 4; ++rank) {
    for_each_tuple(rank, 1, 8, [&](const std::vector<int>& d) {
      if (std::accumulate(d.begin(), d.end(), 1, std::multiplies<>()) <= 32) check(d);
    });
  }
  // Named negatives.
  for (auto d : {std::vector<int>{3, 4}, {3, 6}, {3, 8}, {2, 2, 2}, {2, 2, 5}, {2, 2, 8}, {2, 3, 3}}) {
    check(d);
  }
  const double total = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && total <= 600 && worst <= 60;
  o.detail = std::to_string(boards) + " boards, " + std::to_string(mismatches) + " mismatches" +
             (first_bad.empty() ? "" : " (first " + first_bad + ")") + ", total " +
             std::to_string(total) + " s, slowest board " + std::to_string(worst) + " s";
  return o;
}

Outcome construction_grid() {
  const auto t0 = Clock::now();
  Constructor c;
  int built = 0;
  int refused = 0;
  int failures = 0;
  std::string first_bad;
  for (std::size_t rank = 2; rank <= 5; ++rank) {
    for_each_tuple(rank, 2, 8, [&](const std::vector<int>& d) {
      const BoardSpec b(d);
      if (b.cell_count() > 200'000) return;
      const Verdict v = classify_nd(b);
      bool ok = false;
      try {
        const SitedTour st = c.build(b);
        ok = v.tourable && st.tour.board() == b && !verify(st.tour);
        ++built;
      } catch (const NotTourableError& e) {
        ok = !v.tourable && e.verdict() == v;
        ++refused;
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        ++failures;
        if (first_bad.empty()) first_bad = dims_text(d);
      }
    });
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(built) + " tours verified, " + std::to_string(refused) +
             " boards refused with matching verdict, " + std::to_string(failures) + " failures" +
             (first_bad.empty() ? "" : " (first " + first_bad + ")") + ", " +
             std::to_string(seconds_since(t0)) + " s";
  return o;
}

Outcome bisitedness() {
  int distinct = 0;
  int bisited = 0;
  for (auto d : {std::vector<int>{3, 10}, {3, 12}, {5, 6}, {5, 8}, {6, 6}, {6, 7}, {7, 8}, {8, 8}}) {
    std::vector<Tour> seen;
    for (std::uint64_t seed = 1; seed <= 40 && seen.size() < 3; ++seed) {
      SearchBudget budget;
      budget.seed = seed;
      budget.time_limit = std::chrono::seconds(60);
      const SearchResult r = solve(BoardSpec(d), {}, {}, budget);
      if (!r.tour || verify(*r.tour)) continue;
      bool fresh = true;
      for (const Tour& t : seen) fresh &= !cycle_equal(t, *r.tour);
      if (fresh) seen.push_back(*r.tour);
    }
    for (const Tour& t : seen) {
      ++distinct;
      bisited += is_bisited(t);
    }
  }
  Outcome o;
  o.pass = distinct >= 20 && bisited == distinct;
  o.detail = std::to_string(bisited) + " of " + std::to_string(distinct) +
             " distinct oracle tours bi-sited";
  return o;
}

Outcome lift_invariants() {
  auto& lib = BaseBlockLibrary::shared();
  int lifts = 0;
  int failures = 0;
  int slow = 0;
  double worst = 0;
  std::string first_bad;
  for (const BlockRecipe& r : block_recipes()) {
    if (r.kind != BlockKind::SeededClosed && r.kind != BlockKind::BisitedClosed) continue;
    const Tour& base = lib.get(r.name);
    if (!is_bisited(base)) continue;
    for (int k = 2; k <= 6; ++k) {
      const auto t0 = Clock::now();
      const SitedTour s = lift(base, k);
      const double dt = seconds_since(t0);
      if (base.size() <= 100) {
        worst = std::max(worst, dt);
        slow += dt >= 0.1;
      }
      ++lifts;
      const Tour& t = s.tour;
      bool ok = t.size() == k * base.size() && !verify(t) && is_bisited(t) &&
                s.alpha_sites.size() == 2 && supports_disjoint(s.alpha_sites[0], s.alpha_sites[1]);
      // The free sites sit in layer 1 and layer k.
      const std::size_t last = t.board().rank() - 1;
      for (int i = 0; ok && i < 2; ++i) {
        const Site& site = s.alpha_sites[i];
        const auto again = site_at(t, site.pos_n, site.pos_m, 2);
        ok = again && again->support == site.support;
        const int layer = i == 0 ? 1 : k;
        for (CellId c : site.support) ok = ok && t.board().coord(c, last) == layer;
      }
      if (!ok) {
        ++failures;
        if (first_bad.empty()) first_bad = r.name + " k=" + std::to_string(k);
      }
    }
  }
  Outcome o;
  o.pass = failures == 0 && slow == 0 && lifts > 0;
  o.detail = std::to_string(lifts) + " lifts, " + std::to_string(failures) + " failures" +
             (first_bad.empty() ? "" : " (first " + first_bad + ")") + ", slowest small lift " +
             std::to_string(worst * 1000) + " ms";
  return o;
}

Outcome scale() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, double>> cases = {
      {{6, 6, 6, 6}, 1.0}, {{8, 8, 8, 8, 8}, 1.0}, {{8, 8, 8, 8, 8, 32}, 30.0}};
  for (const auto& [d, limit] : cases) {
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      Constructor c;
      const SitedTour st = c.build(BoardSpec(d));
      ok = !verify(st.tour) && st.tour.size() == st.tour.board().cell_count();
    } catch (const std::exception&) {
      ok = false;
    }
    const double dt = seconds_since(t0);
    o.pass = o.pass && ok && dt < limit;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += dims_text(d) + (ok ? " " : " FAILED ") + std::to_string(dt) + " s";
  }
  return o;
}

Outcome generalized() {
  Outcome o;
  SearchBudget budget;
  budget.time_limit = std::chrono::minutes(5);
  const auto t0 = Clock::now();
  const SearchResult r = solve(BoardSpec({10, 10}), MoveParams(3, 2), {}, budget, [](const Tour& t) {
    try {
      with_generalized_sites(t);
      return true;
    } catch (const Error&) {
      return false;
    }
  });
  const double search = seconds_since(t0);
  if (!r.tour || verify(*r.tour)) {
    o.pass = false;
    o.detail = "no (3,2) tour on 10x10 (" + std::string(to_string(r.status)) + ")";
    return o;
  }
  o.detail = "10x10 (3,2) tour in " + std::to_string(search) + " s";
  for (int k : {4, 5, 6}) {
    const SitedTour g = lift_generalized(*r.tour, k);
    const auto v0 = Clock::now();
    const bool ok = !verify(g.tour) && g.tour.size() == static_cast<std::size_t>(100 * k);
    const double dt = seconds_since(v0);
    o.pass = o.pass && ok && dt < 1.0;
    o.detail += ", 10x10x" + std::to_string(k) + (ok ? " verified in " : " FAILED ") +
                std::to_string(dt * 1000) + " ms";
  }
  return o;
}

Outcome knuth() {
  int boards = 0;
  int mismatches = 0;
  for (int a = 2; a <= 4; ++a) {
    for (int b = 1; b < a; ++b) {
      const int g = std::gcd(a, b);
      const MoveParams mp(a / g, b / g);
      for (int m = 1; m <= 12; ++m) {
        for (int n = 1; n <= 12; ++n) {
          ++boards;
          mismatches += knuth_connectivity_2d(m, n, mp) != is_connected(BoardSpec({m, n}), mp);
        }
      }
    }
  }
  return {mismatches == 0,
          std::to_string(boards) + " (move, board) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome extenders_and_stacking() {
  Outcome o;
  auto& lib = BaseBlockLibrary::shared();
  int extenders = 0;
  for (int m : {3, 5, 6, 7, 8, 9, 10}) {
    try {
      const Tour e = build_extender(m, lib);
      extenders += !verify(e) && is_seeded(e) && e.cell(0) == Cell{4, m} &&
                   e.cell(e.size() - 1) == Cell{4, m - 1};
    } catch (const Error&) {
    }
  }
  int refused = 0;
  for (int m : {1, 2, 4}) {
    try {
      build_extender(m, lib);
    } catch (const Error& e) {
      refused += e.code() == ErrorCode::NoExtender;
    }
  }

  // Grow each seeded base along both axes up to 20 x 20.
  int grown = 0;
  int grown_ok = 0;
  std::set<std::pair<int, int>> reached;
  for (const BlockRecipe& r : block_recipes()) {
    if (r.kind != BlockKind::SeededClosed) continue;
    std::vector<Tour> todo{lib.get(r.name)};
    while (!todo.empty()) {
      const Tour t = todo.back();
      todo.pop_back();
      for (std::size_t axis = 0; axis < 2; ++axis) {
        if (t.board().dim(axis) + 4 > 20) continue;
        // Rows first, then columns.
        if (axis == 0 && t.board().dim(1) != r.dims[1]) continue;
        try {
          const Tour u = extend_seeded(t, axis, lib);
          ++grown;
          if (!verify(u) && is_seeded(u)) {
            ++grown_ok;
            reached.insert({u.board().dim(0), u.board().dim(1)});
            todo.push_back(u);
          }
        } catch (const Error&) {
          ++grown;
        }
      }
    }
  }

  int stacked = 0;
  for (auto [n, m] : {std::pair{5, 5}, {5, 7}, {7, 7}}) {
    try {
      const Tour s = stack_open_pair(lib.get(open_block_name(n, m)));
      stacked += !verify(s) && s.board() == BoardSpec({n, m, 2});
    } catch (const Error&) {
    }
  }
  o.pass = extenders == 7 && refused == 3 && grown_ok == grown && grown > 0 &&
           reached.count({20, 20}) && stacked == 3;
  o.detail = std::to_string(extenders) + "/7 extenders, " + std::to_string(refused) +
             "/3 refused, " + std::to_string(grown_ok) + "/" + std::to_string(grown) +
             " seeded extensions (" + std::to_string(reached.size()) + " sizes, 20x20 " +
             (reached.count({20, 20}) ? "reached" : "missing") + "), " + std::to_string(stacked) +
             "/3 stacked pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 construction grid", construction_grid},
      {"3 bi-sitedness", bisitedness},
      {"4 lift invariants", lift_invariants},
      {"5 scale", scale},
      {"6 generalized moves", generalized},
      {"7 knuth condition", knuth},
      {"8 extenders and stacking", extenders_and_stacking},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
