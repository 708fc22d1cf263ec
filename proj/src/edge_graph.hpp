#pragma once

// Degree-2 adjacency used to splice cycles and paths: tours are loaded as
// edge sets, edges are removed and added, and the result is walked back
// into a vertex order.

#include <array>
#include <span>
#include <vector>

#include "hyperknight/board.hpp"
#include "hyperknight/error.hpp"

namespace hk::detail {

class EdgeGraph {
 public:
  explicit EdgeGraph(std::size_t n) : adj_(n, {kNoCell, kNoCell}) {}

  void add_edge(CellId a, CellId b) {
    link(a, b);
    link(b, a);
  }

  void remove_edge(CellId a, CellId b) {
    unlink(a, b);
    unlink(b, a);
  }

  bool has_edge(CellId a, CellId b) const {
    return adj_[a][0] == b || adj_[a][1] == b;
  }

  void add_path(std::span<const CellId> order, bool closed) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i) add_edge(order[i], order[i + 1]);
    if (closed && order.size() > 2) add_edge(order.back(), order.front());
  }

  /// Walks from `start` through `next` (or its only neighbour when next is
  /// kNoCell) until the walk returns to start or reaches a dead end.
  std::vector<CellId> walk(CellId start, CellId next = kNoCell) const {
    std::vector<CellId> out;
    out.reserve(adj_.size());
    if (next == kNoCell) next = adj_[start][0] != kNoCell ? adj_[start][0] : adj_[start][1];
    CellId prev = start;
    out.push_back(start);
    CellId cur = next;
    while (cur != kNoCell && cur != start) {
      if (out.size() > adj_.size()) {
        throw Error(ErrorCode::Verification, "edge walk does not terminate");
      }
      out.push_back(cur);
      const CellId nxt = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
      prev = cur;
      cur = nxt;
    }
    return out;
  }

 private:
  void link(CellId a, CellId b) {
    auto& slot = adj_[a];
    if (slot[0] == kNoCell) {
      slot[0] = b;
    } else if (slot[1] == kNoCell) {
      slot[1] = b;
    } else {
      throw Error(ErrorCode::Verification, "vertex would exceed degree two");
    }
  }

  void unlink(CellId a, CellId b) {
    auto& slot = adj_[a];
    if (slot[0] == b) {
      slot[0] = slot[1];
      slot[1] = kNoCell;
    } else if (slot[1] == b) {
      slot[1] = kNoCell;
    } else {
      throw Error(ErrorCode::Verification, "edge to remove is missing");
    }
  }

  std::vector<std::array<CellId, 2>> adj_;
};

}  // namespace hk::detail
