#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperknight/board.hpp"

namespace hk {

/// An ordered sequence of cells on a board. Construction only checks that
/// ids are in range; use verify() for the knight-tour invariants.
class Tour {
 public:
  Tour(BoardSpec board, MoveParams moves, std::vector<CellId> order,
       bool closed);

  /// Throws Shape / OutOfBounds for malformed cells.
  static Tour from_cells(BoardSpec board, MoveParams moves,
                         std::span<const Cell> cells, bool closed);

  const BoardSpec& board() const { return board_; }
  const MoveParams& moves() const { return moves_; }
  std::span<const CellId> order() const { return order_; }
  bool closed() const { return closed_; }
  std::size_t size() const { return order_.size(); }
  /// Number of edges: size() for a closed tour, size() - 1 for an open one.
  std::size_t edge_count() const;

  CellId at(std::size_t pos) const { return order_[pos]; }
  /// Cell following position `pos` around the cycle (wraps when closed).
  CellId next(std::size_t pos) const {
    return order_[pos + 1 == order_.size() ? 0 : pos + 1];
  }
  Cell cell(std::size_t pos) const { return board_.cell_at(order_[pos]); }
  std::vector<Cell> cells() const;

  /// pos[id] = position of cell id, kNoCell for unvisited cells.
  std::vector<CellId> positions() const;

 private:
  BoardSpec board_;
  MoveParams moves_;
  std::vector<CellId> order_;
  bool closed_;
};

enum class ViolationKind {
  DuplicateCell,
  OutOfBounds,
  NonKnightStep,
  NotClosed,
  IncompleteCoverage,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t index;  // position of the offending cell or step
  std::string detail;
};

/// std::nullopt means the tour is valid.
std::optional<Violation> verify(const Tour& t);
/// Same checks on raw coordinates, so off-board input can be reported.
std::optional<Violation> verify_cells(const BoardSpec& b, const MoveParams& mp,
                                      std::span<const Cell> cells, bool closed);

/// Negates the beta (shorter) component and keeps the alpha component.
/// Throws Shape unless the vector has exactly two non-zero entries of
/// different magnitude.
MoveVector flip_move(const MoveVector& c);

Tour reversed(const Tour& t);
Tour rotated(const Tour& t, std::size_t shift);
/// Closed: rotate so the smallest cell comes first, then pick the direction
/// whose second cell is smaller. Open: pick the direction with the smaller
/// first cell.
Tour canonical_form(const Tour& t);
bool cycle_equal(const Tour& a, const Tour& b);

/// Moves axis i of `t` to axis perm[i] of the result.
Tour remap_axes(const Tour& t, std::span<const std::size_t> perm);
Tour transposed(const Tour& t);

}  // namespace hk
