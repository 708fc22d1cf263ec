#include "hyperknight/hamilton.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <random>
#include <thread>

#include "hyperknight/error.hpp"

namespace hk {

SearchGraph::SearchGraph(const std::vector<std::vector<Vertex>>& adjacency) {
  offsets_.assign(adjacency.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    offsets_[v + 1] = offsets_[v] + adjacency[v].size();
  }
  targets_.reserve(offsets_.back());
  for (const auto& list : adjacency) {
    const std::size_t first = targets_.size();
    targets_.insert(targets_.end(), list.begin(), list.end());
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(first),
              targets_.end());
  }
}

bool SearchGraph::adjacent(Vertex u, Vertex v) const {
  const auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::vector<std::int8_t> SearchGraph::two_coloring() const {
  std::vector<std::int8_t> color(size(), -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < size(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : neighbors(v)) {
        if (color[w] < 0) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

std::size_t SearchGraph::component_count() const {
  std::vector<char> seen(size(), 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex root = 0; root < size(); ++root) {
    if (seen[root]) continue;
    ++components;
    seen[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr Vertex kNone = ~Vertex{0};

// The problem rewritten as a closed-cycle search anchored at one vertex.
struct Prepared {
  SearchGraph graph;
  Vertex real_count = 0;
  Vertex anchor = 0;
  bool virtual_anchor = false;
  std::vector<std::array<Vertex, 2>> req;
  std::vector<std::uint8_t> req_count;
  std::vector<std::uint8_t> adj_anchor;
  std::vector<std::int8_t> color;  // empty: no balance check
  Vertex first_forced = kNone;
  Vertex forced_last = kNone;
  bool symmetric = false;
};

struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<bool> limit_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_limit = 0;
  std::chrono::steady_clock::time_point deadline;
  std::mutex mu;
  bool found = false;
  std::vector<Vertex> solution;
};

class Searcher {
 public:
  enum class Outcome { Found, Done, Aborted };

  Searcher(const Prepared& p, const SearchBudget& budget, std::uint64_t seed,
           const PathFilter& accept, Shared& shared, std::uint64_t run_limit)
      : p_(p),
        g_(p.graph),
        accept_(accept),
        shared_(shared),
        run_limit_(run_limit),
        warnsdorff_(budget.warnsdorff),
        interval_(budget.connectivity_interval) {
    const Vertex n = g_.size();
    vis_.assign(n, 0);
    cnt_.resize(n);
    mark_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) cnt_[v] = static_cast<int>(g_.degree(v));
    tiebreak_.resize(n);
    std::mt19937_64 rng(seed);
    for (Vertex v = 0; v < n; ++v) tiebreak_[v] = rng();
    if (!p_.color.empty()) {
      for (Vertex v = 0; v < p_.real_count; ++v) ++uc_[p_.color[v]];
    }
    buffers_.resize(n + 1);
    path_.reserve(n);
    push(p_.anchor);
  }

  Outcome search() { return dfs(); }

  Outcome search_prefix(std::span<const Vertex> prefix) {
    std::size_t pushed = 0;
    bool ok = true;
    for (std::size_t i = 1; i < prefix.size() && ok; ++i) {
      ok = advance(prefix[i]);
      ++pushed;
    }
    Outcome out = ok ? dfs() : Outcome::Done;
    while (pushed-- > 0) retreat();
    return out;
  }

  // Collects every surviving path of `depth` vertices beyond the anchor.
  void frontier(std::size_t depth, std::vector<std::vector<Vertex>>& out) {
    if (path_.size() == depth + 1) {
      out.push_back(path_);
      return;
    }
    std::vector<Vertex>& cands = buffers_[path_.size()];
    if (!candidates(cands)) return;
    const std::vector<Vertex> local = cands;
    for (Vertex w : local) {
      if (advance(w)) frontier(depth, out);
      retreat();
    }
  }

  const std::vector<Vertex>& solution() const { return solution_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    vis_[v] = 1;
    if (!p_.color.empty() && v < p_.real_count) --uc_[p_.color[v]];
    for (Vertex x : g_.neighbors(v)) --cnt_[x];
  }

  void retreat() {
    const Vertex v = path_.back();
    path_.pop_back();
    vis_[v] = 0;
    if (!p_.color.empty() && v < p_.real_count) ++uc_[p_.color[v]];
    for (Vertex x : g_.neighbors(v)) ++cnt_[x];
  }

  int anchor_avail(Vertex x) const {
    if (!p_.adj_anchor[x]) return 0;
    return p_.forced_last == kNone || p_.forced_last == x ? 1 : 0;
  }

  // Pushes w; false means the extended path cannot complete.
  bool advance(Vertex w) {
    const Vertex h = path_.back();
    push(w);
    const std::size_t remaining = g_.size() - path_.size();
    if (remaining == 0) return true;
    if (h != p_.anchor) {
      const Vertex prev = path_[path_.size() - 3];
      for (std::uint8_t i = 0; i < p_.req_count[h]; ++i) {
        const Vertex r = p_.req[h][i];
        if (r != prev && r != w) return false;
      }
    }
    for (std::uint8_t i = 0; i < p_.req_count[w]; ++i) {
      const Vertex r = p_.req[w][i];
      if (vis_[r] && r != h) return false;
    }
    if (h != p_.anchor) {
      ++stamp_;
      for (Vertex x : g_.neighbors(w)) mark_[x] = stamp_;
      for (Vertex x : g_.neighbors(h)) {
        if (vis_[x]) continue;
        const int avail = cnt_[x] + (mark_[x] == stamp_ ? 1 : 0) + anchor_avail(x);
        if (avail < 2) return false;
      }
    }
    if (!p_.color.empty() && w < p_.real_count) {
      const int opposite = uc_[1 - p_.color[w]];
      if (static_cast<std::size_t>(opposite) != (remaining + 1) / 2) return false;
    }
    if (interval_ > 0 && path_.size() % interval_ == 0 && !remainder_reachable(w)) {
      return false;
    }
    return true;
  }

  bool remainder_reachable(Vertex head) {
    ++stamp_;
    queue_.clear();
    for (Vertex x : g_.neighbors(head)) {
      if (!vis_[x] && mark_[x] != stamp_) {
        mark_[x] = stamp_;
        queue_.push_back(x);
      }
    }
    bool closer = false;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Vertex v = queue_[i];
      if (anchor_avail(v)) closer = true;
      for (Vertex x : g_.neighbors(v)) {
        if (!vis_[x] && mark_[x] != stamp_) {
          mark_[x] = stamp_;
          queue_.push_back(x);
        }
      }
    }
    return closer && queue_.size() == g_.size() - path_.size();
  }

  // Fills `out` with the moves worth trying from the head; false = dead end.
  bool candidates(std::vector<Vertex>& out) {
    out.clear();
    const Vertex v = path_.back();
    if (path_.size() == 1) {
      if (p_.first_forced != kNone) {
        out.push_back(p_.first_forced);
        return true;
      }
      for (Vertex x : g_.neighbors(v)) out.push_back(x);
      order(out);
      return true;
    }
    const Vertex prev = path_[path_.size() - 2];
    Vertex must = kNone;
    for (std::uint8_t i = 0; i < p_.req_count[v]; ++i) {
      const Vertex r = p_.req[v][i];
      if (r == prev || vis_[r]) continue;
      if (must != kNone) return false;
      must = r;
    }
    if (must != kNone) {
      out.push_back(must);
      return true;
    }
    Vertex forced = kNone;
    for (Vertex x : g_.neighbors(v)) {
      if (vis_[x]) continue;
      const int avail = cnt_[x] + 1 + anchor_avail(x);
      if (avail < 2) return false;
      if (avail == 2) {
        if (forced != kNone) return false;
        forced = x;
      }
      out.push_back(x);
    }
    if (forced != kNone) {
      out.assign(1, forced);
      return true;
    }
    order(out);
    return true;
  }

  void order(std::vector<Vertex>& out) const {
    if (warnsdorff_) {
      std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
        if (cnt_[a] != cnt_[b]) return cnt_[a] < cnt_[b];
        return tiebreak_[a] < tiebreak_[b];
      });
    } else {
      std::sort(out.begin(), out.end());
    }
  }

  bool closes() const {
    const Vertex v = path_.back();
    if (!anchor_avail(v)) return false;
    const Vertex prev = path_[path_.size() - 2];
    for (std::uint8_t i = 0; i < p_.req_count[v]; ++i) {
      const Vertex r = p_.req[v][i];
      if (r != prev && r != p_.anchor) return false;
    }
    if (p_.symmetric && v < path_[1]) return false;
    return true;
  }

  bool out_of_budget() {
    shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
    if (shared_.stop.load(std::memory_order_relaxed)) return true;
    if (shared_.nodes.load(std::memory_order_relaxed) >= shared_.node_limit ||
        std::chrono::steady_clock::now() >= shared_.deadline) {
      shared_.limit_hit = true;
      return true;
    }
    return false;
  }

  Outcome dfs() {
    if (path_.size() == g_.size()) {
      if (closes() && (!accept_ || accept_(path_))) {
        solution_ = path_;
        return Outcome::Found;
      }
      return Outcome::Done;
    }
    std::vector<Vertex>& cands = buffers_[path_.size()];
    if (!candidates(cands)) return Outcome::Done;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (++nodes_ >= run_limit_) return Outcome::Aborted;
      if ((nodes_ & 1023) == 0 && out_of_budget()) return Outcome::Aborted;
      const Vertex w = cands[i];
      const bool ok = advance(w);
      if (ok) {
        const Outcome r = dfs();
        if (r != Outcome::Done) {
          retreat();
          return r;
        }
      }
      retreat();
    }
    return Outcome::Done;
  }

  const Prepared& p_;
  const SearchGraph& g_;
  const PathFilter& accept_;
  Shared& shared_;
  std::uint64_t run_limit_;
  bool warnsdorff_;
  unsigned interval_;

  std::vector<Vertex> path_;
  std::vector<char> vis_;
  std::vector<int> cnt_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint64_t> tiebreak_;
  std::array<int, 2> uc_{0, 0};
  std::vector<std::vector<Vertex>> buffers_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> solution_;
  std::uint64_t nodes_ = 0;
};

void add_requirement(Prepared& p, Vertex a, Vertex b) {
  for (std::uint8_t i = 0; i < p.req_count[a]; ++i) {
    if (p.req[a][i] == b) return;
  }
  if (p.req_count[a] == 2 || p.req_count[b] == 2) {
    throw Error(ErrorCode::ConstraintConflict,
                "a vertex has more than two required edges");
  }
  p.req[a][p.req_count[a]++] = b;
  p.req[b][p.req_count[b]++] = a;
}

Prepared prepare(const PathProblem& problem) {
  const SearchGraph& g = problem.graph;
  const Vertex n = g.size();
  Prepared p;
  p.real_count = n;
  auto check_vertex = [&](Vertex v) {
    if (v >= n) throw Error(ErrorCode::ConstraintConflict, "vertex out of range");
  };
  if (problem.closed && problem.end) {
    throw Error(ErrorCode::ConstraintConflict, "a closed search takes no end cell");
  }
  if (!problem.closed && problem.start && problem.end &&
      *problem.start == *problem.end) {
    throw Error(ErrorCode::ConstraintConflict, "open path needs distinct endpoints");
  }
  for (auto [a, b] : problem.required) {
    check_vertex(a);
    check_vertex(b);
    if (a == b || !g.adjacent(a, b)) {
      throw Error(ErrorCode::ConstraintConflict, "required edge is not a move");
    }
  }
  if (problem.start) check_vertex(*problem.start);
  if (problem.end) check_vertex(*problem.end);

  std::vector<std::int8_t> coloring = g.two_coloring();

  if (problem.closed) {
    p.graph = g;
    p.req.assign(n, {kNone, kNone});
    p.req_count.assign(n, 0);
    for (auto [a, b] : problem.required) add_requirement(p, a, b);
    p.color = std::move(coloring);
  } else {
    const Vertex z = n;
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (Vertex v = 0; v < n; ++v) {
      const auto nb = g.neighbors(v);
      adj[v].assign(nb.begin(), nb.end());
    }
    auto join = [&](Vertex v) {
      adj[v].push_back(z);
      adj[z].push_back(v);
    };
    if (problem.start && problem.end) {
      join(*problem.start);
      join(*problem.end);
    } else {
      for (Vertex v = 0; v < n; ++v) join(v);
    }
    p.graph = SearchGraph(adj);
    p.req.assign(n + 1, {kNone, kNone});
    p.req_count.assign(n + 1, 0);
    if (problem.start) add_requirement(p, z, *problem.start);
    if (problem.end) add_requirement(p, z, *problem.end);
    for (auto [a, b] : problem.required) add_requirement(p, a, b);
    p.anchor = z;
    p.virtual_anchor = true;
    if (!coloring.empty()) {
      coloring.push_back(-1);
      p.color = std::move(coloring);
    }
  }

  return p;
}

// Anchors a closed search at a vertex with the most required edges, then
// lowest degree. A non-zero seed picks a random vertex among those with the
// most required edges instead, which lets restarts leave a bad anchor.
void set_anchor(Prepared& p, std::uint64_t seed) {
  if (!p.virtual_anchor) {
    const SearchGraph& g = p.graph;
    const Vertex n = g.size();
    auto rank = [&](Vertex v) {
      return std::make_pair(-static_cast<int>(p.req_count[v]),
                            static_cast<int>(g.degree(v)));
    };
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (rank(v) < rank(best)) best = v;
    }
    if (seed != 0) {
      std::vector<Vertex> pool;
      for (Vertex v = 0; v < n; ++v) {
        if (p.req_count[v] == p.req_count[best]) pool.push_back(v);
      }
      best = pool[mix_seed(seed, 7) % pool.size()];
    }
    p.anchor = best;
  }
  p.first_forced = kNone;
  p.forced_last = kNone;
  p.symmetric = false;
  const Vertex a = p.anchor;
  p.adj_anchor.assign(p.graph.size(), 0);
  for (Vertex x : p.graph.neighbors(a)) p.adj_anchor[x] = 1;
  if (p.req_count[a] >= 1) p.first_forced = p.req[a][0];
  if (p.req_count[a] == 2) p.forced_last = p.req[a][1];
  if (p.req_count[a] == 0) {
    if (p.graph.degree(a) == 2) {
      p.first_forced = p.graph.neighbors(a)[0];
      p.forced_last = p.graph.neighbors(a)[1];
    } else {
      p.symmetric = true;
    }
  }
}

// Cheap necessary conditions on the real graph; true when they rule the
// problem out.
bool trivially_impossible(const PathProblem& problem) {
  const SearchGraph& g = problem.graph;
  const Vertex n = g.size();
  if (n == 0) return true;
  if (problem.closed && n < 3) return true;
  if (g.component_count() > 1) return true;
  if (problem.closed) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) < 2) return true;
    }
  }
  return false;
}

std::vector<Vertex> finish_order(const PathProblem& problem, const Prepared& p,
                                 const std::vector<Vertex>& path) {
  std::vector<Vertex> out;
  if (p.virtual_anchor) {
    out.assign(path.begin() + 1, path.end());
    if ((problem.start && out.front() != *problem.start) ||
        (!problem.start && problem.end && out.back() != *problem.end)) {
      std::reverse(out.begin(), out.end());
    }
  } else {
    out = path;
    if (problem.start) {
      auto it = std::find(out.begin(), out.end(), *problem.start);
      std::rotate(out.begin(), it, out.end());
    }
  }
  return out;
}

}  // namespace

PathResult find_hamiltonian(const PathProblem& problem,
                            const SearchBudget& budget,
                            const PathFilter& accept) {
  PathResult result;
  Prepared p = prepare(problem);
  set_anchor(p, 0);
  const Vertex n = problem.graph.size();
  if (!problem.closed && n == 1) {
    std::vector<Vertex> single{0};
    if (problem.required.empty() && (!accept || accept(single))) {
      result.status = SearchStatus::Found;
      result.order = single;
      return result;
    }
  }
  if (trivially_impossible(problem)) {
    result.status = SearchStatus::ProvedNone;
    return result;
  }

  PathFilter real_accept;
  if (accept) {
    real_accept = [&](std::span<const Vertex> path) {
      std::vector<Vertex> v(path.begin(), path.end());
      return accept(finish_order(problem, p, v));
    };
  }

  Shared shared;
  shared.node_limit = budget.node_limit;
  shared.deadline = std::chrono::steady_clock::now() + budget.time_limit;
  const bool provable = n <= budget.proof_cell_cap;

  auto conclude_none = [&]() {
    result.status = provable ? SearchStatus::ProvedNone : SearchStatus::Exhausted;
  };

  if (budget.workers <= 1 || n < 12) {
    for (std::uint64_t run = 0;; ++run) {
      const std::uint64_t limit =
          budget.restart_base == 0
              ? ~std::uint64_t{0}
              : budget.restart_base << std::min<std::uint64_t>(run, 40);
      const std::uint64_t seed = run == 0 ? budget.seed : mix_seed(budget.seed, run);
      if (run > 0) set_anchor(p, seed);
      Searcher s(p, budget, seed, real_accept, shared, limit);
      const auto outcome = s.search();
      result.nodes += s.nodes();
      if (outcome == Searcher::Outcome::Found) {
        result.status = SearchStatus::Found;
        result.order = finish_order(problem, p, s.solution());
        return result;
      }
      if (outcome == Searcher::Outcome::Done) {
        conclude_none();
        return result;
      }
      if (shared.limit_hit) {
        result.status = SearchStatus::Exhausted;
        return result;
      }
    }
  }

  // Parallel: split the first levels into prefixes, workers drain them.
  std::vector<std::vector<Vertex>> prefixes;
  {
    Searcher root(p, budget, budget.seed, real_accept, shared, ~std::uint64_t{0});
    for (std::size_t depth = 1; depth < n / 2; ++depth) {
      prefixes.clear();
      root.frontier(depth, prefixes);
      if (prefixes.size() >= 8 * budget.workers || prefixes.empty()) break;
    }
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  std::atomic<std::uint64_t> total_nodes{0};
  for (unsigned w = 0; w < budget.workers; ++w) {
    threads.emplace_back([&, w] {
      Searcher s(p, budget, mix_seed(budget.seed, 1000 + w), real_accept, shared,
                 ~std::uint64_t{0});
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size() || shared.stop) break;
        const auto outcome = s.search_prefix(prefixes[i]);
        if (outcome == Searcher::Outcome::Found) {
          std::lock_guard lock(shared.mu);
          if (!shared.found) {
            shared.found = true;
            shared.solution = s.solution();
          }
          shared.stop = true;
          break;
        }
        if (outcome == Searcher::Outcome::Aborted) break;
      }
      total_nodes += s.nodes();
    });
  }
  for (auto& t : threads) t.join();
  result.nodes = total_nodes;
  if (shared.found) {
    result.status = SearchStatus::Found;
    result.order = finish_order(problem, p, shared.solution);
  } else if (shared.limit_hit) {
    result.status = SearchStatus::Exhausted;
  } else {
    conclude_none();
  }
  return result;
}

}  // namespace hk
