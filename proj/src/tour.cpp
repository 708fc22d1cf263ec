#include "hyperknight/tour.hpp"

#include <algorithm>
#include <cstdlib>

#include "hyperknight/error.hpp"

namespace hk {

Tour::Tour(BoardSpec board, MoveParams moves, std::vector<CellId> order,
           bool closed)
    : board_(std::move(board)),
      moves_(moves),
      order_(std::move(order)),
      closed_(closed) {
  for (CellId id : order_) {
    if (id >= board_.cell_count()) {
      throw Error(ErrorCode::OutOfBounds, "tour cell id off board");
    }
  }
}

Tour Tour::from_cells(BoardSpec board, MoveParams moves,
                      std::span<const Cell> cells, bool closed) {
  std::vector<CellId> order;
  order.reserve(cells.size());
  for (const Cell& c : cells) order.push_back(board.index_of(c));
  return Tour(std::move(board), moves, std::move(order), closed);
}

std::size_t Tour::edge_count() const {
  if (order_.empty()) return 0;
  return closed_ ? order_.size() : order_.size() - 1;
}

std::vector<Cell> Tour::cells() const {
  std::vector<Cell> out;
  out.reserve(order_.size());
  for (CellId id : order_) out.push_back(board_.cell_at(id));
  return out;
}

std::vector<CellId> Tour::positions() const {
  std::vector<CellId> pos(board_.cell_count(), kNoCell);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    pos[order_[i]] = static_cast<CellId>(i);
  }
  return pos;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateCell: return "DuplicateCell";
    case ViolationKind::OutOfBounds: return "OutOfBounds";
    case ViolationKind::NonKnightStep: return "NonKnightStep";
    case ViolationKind::NotClosed: return "NotClosed";
    case ViolationKind::IncompleteCoverage: return "IncompleteCoverage";
  }
  return "?";
}

namespace {

std::optional<Violation> verify_ids(const BoardSpec& b, const MoveParams& mp,
                                    std::span<const CellId> order,
                                    bool closed) {
  std::vector<char> seen(b.cell_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen[order[i]]) {
      return Violation{ViolationKind::DuplicateCell, i,
                       "cell visited twice at position " + std::to_string(i)};
    }
    seen[order[i]] = 1;
    if (i > 0 && !is_edge(b, order[i - 1], order[i], mp)) {
      return Violation{ViolationKind::NonKnightStep, i,
                       "step " + std::to_string(i - 1) + " -> " +
                           std::to_string(i) + " is not a move"};
    }
  }
  if (closed && (order.size() < 3 ||
                 !is_edge(b, order.back(), order.front(), mp))) {
    return Violation{ViolationKind::NotClosed, order.size(),
                     "last cell does not attack the first"};
  }
  if (order.size() != b.cell_count()) {
    return Violation{ViolationKind::IncompleteCoverage, order.size(),
                     std::to_string(order.size()) + " of " +
                         std::to_string(b.cell_count()) + " cells visited"};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> verify(const Tour& t) {
  return verify_ids(t.board(), t.moves(), t.order(), t.closed());
}

std::optional<Violation> verify_cells(const BoardSpec& b, const MoveParams& mp,
                                      std::span<const Cell> cells,
                                      bool closed) {
  std::vector<CellId> order;
  order.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!b.contains(cells[i])) {
      return Violation{ViolationKind::OutOfBounds, i,
                       "cell at position " + std::to_string(i) + " is off board"};
    }
    order.push_back(b.index_of(cells[i]));
  }
  return verify_ids(b, mp, order, closed);
}

MoveVector flip_move(const MoveVector& c) {
  std::size_t nonzero = 0;
  std::size_t small = 0;
  std::size_t large = 0;
  for (std::size_t i = 0; i < c.delta.size(); ++i) {
    if (c.delta[i] == 0) continue;
    if (++nonzero > 2) break;
    if (nonzero == 1) {
      small = large = i;
    } else if (std::abs(c.delta[i]) < std::abs(c.delta[small])) {
      small = i;
    } else {
      large = i;
    }
  }
  if (nonzero != 2 || std::abs(c.delta[small]) == std::abs(c.delta[large])) {
    throw Error(ErrorCode::Shape, "not a knight move vector");
  }
  MoveVector out = c;
  out.delta[small] = -out.delta[small];
  return out;
}

Tour reversed(const Tour& t) {
  std::vector<CellId> order(t.order().rbegin(), t.order().rend());
  return Tour(t.board(), t.moves(), std::move(order), t.closed());
}

Tour rotated(const Tour& t, std::size_t shift) {
  std::vector<CellId> order(t.order().begin(), t.order().end());
  if (!order.empty()) {
    std::rotate(order.begin(), order.begin() + (shift % order.size()),
                order.end());
  }
  return Tour(t.board(), t.moves(), std::move(order), t.closed());
}

Tour canonical_form(const Tour& t) {
  if (t.size() < 2) return t;
  if (!t.closed()) {
    return t.order().front() <= t.order().back() ? t : reversed(t);
  }
  const auto order = t.order();
  const std::size_t first =
      static_cast<std::size_t>(std::min_element(order.begin(), order.end()) -
                               order.begin());
  Tour r = rotated(t, first);
  if (r.order()[1] > r.order().back()) {
    r = rotated(reversed(r), r.size() - 1);
  }
  return r;
}

bool cycle_equal(const Tour& a, const Tour& b) {
  if (!(a.board() == b.board()) || a.closed() != b.closed()) return false;
  const Tour ca = canonical_form(a);
  const Tour cb = canonical_form(b);
  return std::equal(ca.order().begin(), ca.order().end(), cb.order().begin(),
                    cb.order().end());
}

Tour remap_axes(const Tour& t, std::span<const std::size_t> perm) {
  const BoardSpec& src = t.board();
  if (perm.size() != src.rank()) {
    throw Error(ErrorCode::Shape, "permutation rank mismatch");
  }
  std::vector<int> dims(src.rank());
  for (std::size_t i = 0; i < perm.size(); ++i) dims[perm[i]] = src.dim(i);
  BoardSpec dst(std::move(dims));
  std::vector<std::int64_t> stride(src.rank());
  for (std::size_t i = 0; i < perm.size(); ++i) stride[i] = dst.stride(perm[i]);
  std::vector<CellId> order;
  order.reserve(t.size());
  std::vector<int> c(src.rank());
  for (CellId id : t.order()) {
    src.decode(id, c);
    std::int64_t out = 0;
    for (std::size_t i = 0; i < c.size(); ++i) out += (c[i] - 1) * stride[i];
    order.push_back(static_cast<CellId>(out));
  }
  return Tour(std::move(dst), t.moves(), std::move(order), t.closed());
}

Tour transposed(const Tour& t) {
  if (t.board().rank() != 2) {
    throw Error(ErrorCode::Shape, "transpose needs a 2D tour");
  }
  const std::size_t perm[2] = {1, 0};
  return remap_axes(t, perm);
}

}  // namespace hk
