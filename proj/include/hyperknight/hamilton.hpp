#pragma once

// Depth-first Hamiltonian cycle / path search on an arbitrary sparse graph.
//
// Open paths are reduced to cycles through a virtual vertex joined to the
// allowed endpoints. Pruning: available-degree counting with forced moves,
// required-edge bookkeeping, colour balance on bipartite graphs and a
// periodic reachability check of the unvisited remainder.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hk {

using Vertex = std::uint32_t;

/// Compressed sparse adjacency with sorted neighbour lists.
class SearchGraph {
 public:
  SearchGraph() = default;
  explicit SearchGraph(const std::vector<std::vector<Vertex>>& adjacency);

  Vertex size() const { return static_cast<Vertex>(offsets_.size() - 1); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// BFS 2-colouring; empty when the graph is not bipartite.
  std::vector<std::int8_t> two_coloring() const;
  std::size_t component_count() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

struct PathProblem {
  SearchGraph graph;
  std::vector<std::pair<Vertex, Vertex>> required;
  std::optional<Vertex> start;
  std::optional<Vertex> end;
  bool closed = true;
};

struct SearchBudget {
  std::uint64_t node_limit = 4'000'000'000ULL;
  std::chrono::milliseconds time_limit{60'000};
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Fewest-onward-moves first; when false neighbours are tried by id.
  bool warnsdorff = true;
  /// Depth interval between reachability checks of the unvisited cells.
  unsigned connectivity_interval = 4;
  /// Completed searches on larger graphs report Exhausted, not ProvedNone.
  std::uint32_t proof_cell_cap = 40;
  /// First restart cap in nodes; doubles on every restart. 0 disables
  /// restarts (one exhaustive run).
  std::uint64_t restart_base = 20'000;
};

enum class SearchStatus { Found, ProvedNone, Exhausted };

struct PathResult {
  SearchStatus status = SearchStatus::Exhausted;
  /// Vertex order; a closed result starts at `start` when one was given.
  std::vector<Vertex> order;
  std::uint64_t nodes = 0;
};

using PathFilter = std::function<bool(std::span<const Vertex>)>;

/// Throws Error(ConstraintConflict) for inconsistent requirements.
PathResult find_hamiltonian(const PathProblem& problem,
                            const SearchBudget& budget,
                            const PathFilter& accept = {});

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace hk
