#pragma once

// Boards, generalized knight moves and the move graph.
//
// Coordinates are 1-based on every public interface. Cells are also
// addressed by a dense row-major CellId (last axis fastest), so the
// numeric order of ids equals the lexicographic order of coordinates.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hk {

using CellId = std::uint32_t;
using Cell = std::vector<int>;

inline constexpr CellId kNoCell = static_cast<CellId>(-1);

class BoardSpec {
 public:
  /// Throws Error(InvalidBoard) for an empty list, a side < 1, or more
  /// cells than a CellId can address.
  explicit BoardSpec(std::vector<int> dims);

  std::span<const int> dims() const { return dims_; }
  int dim(std::size_t axis) const { return dims_[axis]; }
  std::size_t rank() const { return dims_.size(); }
  CellId cell_count() const { return cell_count_; }
  std::int64_t stride(std::size_t axis) const { return strides_[axis]; }

  bool contains(std::span<const int> coords) const;
  /// Throws Shape on a rank mismatch and OutOfBounds outside the board.
  CellId index_of(std::span<const int> coords) const;
  Cell cell_at(CellId id) const;
  void decode(CellId id, std::span<int> coords) const;
  int coord(CellId id, std::size_t axis) const {
    return static_cast<int>((id / strides_[axis]) % dims_[axis]) + 1;
  }

  friend bool operator==(const BoardSpec& a, const BoardSpec& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  CellId cell_count_ = 0;
};

/// The (alpha, beta) pair of a generalized knight; stored with alpha > beta.
class MoveParams {
 public:
  MoveParams() = default;
  /// Normalizes the order; throws InvalidMoves when alpha == beta or either
  /// is non-positive.
  MoveParams(int alpha, int beta);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  bool classical() const { return alpha_ == 2 && beta_ == 1; }

  friend bool operator==(const MoveParams&, const MoveParams&) = default;

 private:
  int alpha_ = 2;
  int beta_ = 1;
};

struct MoveVector {
  std::vector<int> delta;

  friend bool operator==(const MoveVector&, const MoveVector&) = default;
  friend auto operator<=>(const MoveVector&, const MoveVector&) = default;
};

/// True iff delta has exactly two non-zero entries, one of them +-alpha
/// and the other +-beta.
bool is_move_vector(std::span<const int> delta, const MoveParams& mp);

/// All move vectors in `k` dimensions, lexicographically sorted.
/// Throws DimensionTooSmall for k < 2.
std::vector<MoveVector> move_set(std::size_t k, const MoveParams& mp);

/// Edge relation of the move graph. Throws Shape if the coordinate
/// lists do not match the board rank, OutOfBounds if a cell is off-board.
bool is_edge(const BoardSpec& b, const Cell& a, const Cell& c,
             const MoveParams& mp = {});
bool is_edge(const BoardSpec& b, CellId a, CellId c, const MoveParams& mp = {});

/// In-bounds cells one move away from `a`, ordered by move vector.
std::vector<Cell> neighbors(const BoardSpec& b, const Cell& a,
                            const MoveParams& mp = {});

/// -(-1)^(a_1 + ... + a_k). When alpha + beta is odd a move changes the
/// coordinate sum by an odd amount, so the ends of an edge differ.
int color(const Cell& a);

bool is_connected(const BoardSpec& b, const MoveParams& mp = {});

/// Sorted board plus the axis permutation back to the input:
/// sorted.dim(i) == original.dim(perm[i]).
struct CanonicalBoard {
  BoardSpec board;
  std::vector<std::size_t> perm;
};
CanonicalBoard canonicalize(const BoardSpec& b);

/// Enumerates in-bounds neighbours of cells by id without allocating.
class MoveGraph {
 public:
  MoveGraph(BoardSpec board, MoveParams mp);

  const BoardSpec& board() const { return board_; }
  const MoveParams& moves() const { return mp_; }

  template <typename F>
  void for_each_neighbor(CellId id, F&& f) const {
    int coords[kMaxStackRank];
    std::vector<int> heap;
    int* c = coords;
    if (board_.rank() > kMaxStackRank) {
      heap.resize(board_.rank());
      c = heap.data();
    }
    board_.decode(id, std::span<int>(c, board_.rank()));
    for (const Step& s : steps_) {
      const int x = c[s.axis_a] + s.amount_a;
      const int y = c[s.axis_b] + s.amount_b;
      if (x < 1 || x > board_.dim(s.axis_a) || y < 1 ||
          y > board_.dim(s.axis_b)) {
        continue;
      }
      f(static_cast<CellId>(static_cast<std::int64_t>(id) + s.offset));
    }
  }

  std::size_t degree(CellId id) const;

 private:
  static constexpr std::size_t kMaxStackRank = 16;
  struct Step {
    std::size_t axis_a;
    int amount_a;
    std::size_t axis_b;
    int amount_b;
    std::int64_t offset;
  };

  BoardSpec board_;
  MoveParams mp_;
  std::vector<Step> steps_;
};

}  // namespace hk
