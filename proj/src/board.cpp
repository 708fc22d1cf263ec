#include "hyperknight/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "hyperknight/error.hpp"

namespace hk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidBoard: return "invalid-board";
    case ErrorCode::InvalidMoves: return "invalid-moves";
    case ErrorCode::DimensionTooSmall: return "dimension-too-small";
    case ErrorCode::Shape: return "shape";
    case ErrorCode::OutOfBounds: return "out-of-bounds";
    case ErrorCode::UnsupportedInput: return "unsupported-input";
    case ErrorCode::InvalidLayers: return "invalid-layer";
    case ErrorCode::MissingSites: return "missing-sites";
    case ErrorCode::NotGluable: return "not-gluable";
    case ErrorCode::NoExtender: return "no-extender";
    case ErrorCode::NotSeeded: return "not-seeded";
    case ErrorCode::EndpointMismatch: return "endpoint";
    case ErrorCode::NotTourable: return "not-tourable";
    case ErrorCode::ConstraintConflict: return "constraint";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Verification: return "verification";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

BoardSpec::BoardSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(ErrorCode::InvalidBoard, "board needs at least one axis");
  }
  std::uint64_t count = 1;
  for (int d : dims_) {
    if (d < 1) {
      throw Error(ErrorCode::InvalidBoard,
                  "board side must be positive, got " + std::to_string(d));
    }
    count *= static_cast<std::uint64_t>(d);
    if (count >= std::numeric_limits<CellId>::max()) {
      throw Error(ErrorCode::InvalidBoard, "board has too many cells");
    }
  }
  cell_count_ = static_cast<CellId>(count);
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size() - 1; i > 0; --i) {
    strides_[i - 1] = strides_[i] * dims_[i];
  }
}

bool BoardSpec::contains(std::span<const int> coords) const {
  if (coords.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1 || coords[i] > dims_[i]) return false;
  }
  return true;
}

CellId BoardSpec::index_of(std::span<const int> coords) const {
  if (coords.size() != dims_.size()) {
    throw Error(ErrorCode::Shape, "cell has " + std::to_string(coords.size()) +
                                      " coordinates, board has " +
                                      std::to_string(dims_.size()) + " axes");
  }
  std::int64_t id = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1 || coords[i] > dims_[i]) {
      throw Error(ErrorCode::OutOfBounds, "cell outside the board");
    }
    id += static_cast<std::int64_t>(coords[i] - 1) * strides_[i];
  }
  return static_cast<CellId>(id);
}

Cell BoardSpec::cell_at(CellId id) const {
  Cell c(dims_.size());
  decode(id, c);
  return c;
}

void BoardSpec::decode(CellId id, std::span<int> coords) const {
  std::int64_t rest = id;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    coords[i] = static_cast<int>(rest / strides_[i]) + 1;
    rest %= strides_[i];
  }
}

MoveParams::MoveParams(int alpha, int beta) {
  if (alpha <= 0 || beta <= 0) {
    throw Error(ErrorCode::InvalidMoves, "move components must be positive");
  }
  if (alpha == beta) {
    throw Error(ErrorCode::InvalidMoves, "alpha and beta must differ");
  }
  alpha_ = std::max(alpha, beta);
  beta_ = std::min(alpha, beta);
}

bool is_move_vector(std::span<const int> delta, const MoveParams& mp) {
  int alphas = 0;
  int betas = 0;
  for (int v : delta) {
    if (v == 0) continue;
    const int a = std::abs(v);
    if (a == mp.alpha()) {
      ++alphas;
    } else if (a == mp.beta()) {
      ++betas;
    } else {
      return false;
    }
  }
  return alphas == 1 && betas == 1;
}

std::vector<MoveVector> move_set(std::size_t k, const MoveParams& mp) {
  if (k < 2) {
    throw Error(ErrorCode::DimensionTooSmall,
                "moves need at least two axes, got " + std::to_string(k));
  }
  std::vector<MoveVector> out;
  out.reserve(4 * k * (k - 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          MoveVector m{std::vector<int>(k, 0)};
          m.delta[i] = si * mp.alpha();
          m.delta[j] = sj * mp.beta();
          out.push_back(std::move(m));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_on_board(const BoardSpec& b, const Cell& a) {
  if (a.size() != b.rank()) {
    throw Error(ErrorCode::Shape, "cell rank does not match board rank");
  }
  if (!b.contains(a)) throw Error(ErrorCode::OutOfBounds, "cell off board");
}

}  // namespace

bool is_edge(const BoardSpec& b, const Cell& a, const Cell& c,
             const MoveParams& mp) {
  require_on_board(b, a);
  require_on_board(b, c);
  std::vector<int> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - c[i];
  return is_move_vector(diff, mp);
}

bool is_edge(const BoardSpec& b, CellId a, CellId c, const MoveParams& mp) {
  if (a >= b.cell_count() || c >= b.cell_count()) {
    throw Error(ErrorCode::OutOfBounds, "cell id off board");
  }
  int alphas = 0;
  int betas = 0;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const int d = std::abs(b.coord(a, i) - b.coord(c, i));
    if (d == 0) continue;
    if (d == mp.alpha()) {
      ++alphas;
    } else if (d == mp.beta()) {
      ++betas;
    } else {
      return false;
    }
  }
  return alphas == 1 && betas == 1;
}

std::vector<Cell> neighbors(const BoardSpec& b, const Cell& a,
                            const MoveParams& mp) {
  require_on_board(b, a);
  std::vector<Cell> out;
  if (b.rank() < 2) return out;
  for (const MoveVector& m : move_set(b.rank(), mp)) {
    Cell c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += m.delta[i];
    if (b.contains(c)) out.push_back(std::move(c));
  }
  return out;
}

int color(const Cell& a) {
  int sum = 0;
  for (int v : a) sum += v;
  return sum % 2 == 0 ? -1 : 1;
}

bool is_connected(const BoardSpec& b, const MoveParams& mp) {
  const CellId n = b.cell_count();
  if (n <= 1) return true;
  if (b.rank() < 2) return false;
  MoveGraph g(b, mp);
  std::vector<char> seen(n, 0);
  std::vector<CellId> queue;
  queue.reserve(n);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    g.for_each_neighbor(queue[head], [&](CellId w) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    });
  }
  return queue.size() == n;
}

CanonicalBoard canonicalize(const BoardSpec& b) {
  std::vector<std::size_t> perm(b.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return b.dim(x) < b.dim(y);
  });
  std::vector<int> dims(b.rank());
  for (std::size_t i = 0; i < perm.size(); ++i) dims[i] = b.dim(perm[i]);
  return {BoardSpec(std::move(dims)), std::move(perm)};
}

MoveGraph::MoveGraph(BoardSpec board, MoveParams mp)
    : board_(std::move(board)), mp_(mp) {
  if (board_.rank() < 2) return;
  for (const MoveVector& m : move_set(board_.rank(), mp_)) {
    Step s{};
    bool first = true;
    for (std::size_t i = 0; i < m.delta.size(); ++i) {
      if (m.delta[i] == 0) continue;
      if (first) {
        s.axis_a = i;
        s.amount_a = m.delta[i];
        first = false;
      } else {
        s.axis_b = i;
        s.amount_b = m.delta[i];
      }
    }
    s.offset = s.amount_a * board_.stride(s.axis_a) +
               s.amount_b * board_.stride(s.axis_b);
    steps_.push_back(s);
  }
}

std::size_t MoveGraph::degree(CellId id) const {
  std::size_t d = 0;
  for_each_neighbor(id, [&](CellId) { ++d; });
  return d;
}

}  // namespace hk
