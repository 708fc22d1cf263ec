#include "hyperknight/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "edge_graph.hpp"

namespace hk {

namespace {

using detail::EdgeGraph;

std::string dims_text(std::span<const int> dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(dims[i]);
  }
  return s;
}

void check_valid(const Tour& t, const char* what) {
  if (auto v = verify(t)) {
    throw Error(ErrorCode::Verification, std::string(what) + ": " + v->detail);
  }
}

// Position of the tour edge {u, v}.
std::size_t edge_position(std::span<const CellId> pos, std::size_t n, CellId u, CellId v) {
  const std::size_t pu = pos[u];
  const std::size_t pv = pos[v];
  if ((pu + 1) % n == pv) return pu;
  if ((pv + 1) % n == pu) return pv;
  throw Error(ErrorCode::Verification, "expected tour edge is missing");
}

// The copy of `s` in `layer` of a lifted tour with k layers.
Site relocate(const Tour& out, std::span<const CellId> pos, const Site& s, int layer,
              int k) {
  std::array<CellId, 4> c{};
  for (int i = 0; i < 4; ++i) {
    c[i] = static_cast<CellId>(static_cast<std::uint64_t>(s.support[i]) * k + (layer - 1));
  }
  const std::size_t e1 = edge_position(pos, out.size(), c[0], c[1]);
  const std::size_t e2 = edge_position(pos, out.size(), c[2], c[3]);
  auto site = site_at(out, e1, e2, s.magnitude);
  if (!site) throw Error(ErrorCode::Verification, "designated site lost by lift");
  return *site;
}

// Re-reads a site from a tour whose order positions match the original.
Site follow(const Tour& out, const Site& s, std::size_t axis) {
  Site r = s;
  r.support = {out.at(s.pos_n), out.next(s.pos_n), out.at(s.pos_m), out.next(s.pos_m)};
  r.axis = axis;
  return r;
}

struct Join {
  const Site* site;
  int lower;
  int upper;
};

// Stacks k copies of t's cycle (new last axis) and applies the joins.
Tour assemble(const Tour& t, int k, const std::vector<Join>& joins, const Site& first,
              int first_upper) {
  const BoardSpec& b = t.board();
  std::vector<int> dims(b.dims().begin(), b.dims().end());
  dims.push_back(k);
  BoardSpec out(dims);
  const auto id = [k](CellId c, int layer) {
    return static_cast<CellId>(static_cast<std::uint64_t>(c) * k + (layer - 1));
  };
  EdgeGraph g(out.cell_count());
  const std::size_t n = t.size();
  for (int layer = 1; layer <= k; ++layer) {
    for (std::size_t i = 0; i < n; ++i) g.add_edge(id(t.at(i), layer), id(t.next(i), layer));
  }
  for (const Join& j : joins) {
    const Site& s = *j.site;
    g.remove_edge(id(s.support[0], j.lower), id(s.support[1], j.lower));
    g.remove_edge(id(s.support[2], j.upper), id(s.support[3], j.upper));
    for (const auto& [x, y] : s.pairing()) g.add_edge(id(x, j.lower), id(y, j.upper));
  }
  const CellId start = id(first.support[0], 1);
  const CellId next = id(first.pairing()[0].second, first_upper);
  std::vector<CellId> order = g.walk(start, next);
  if (order.size() != out.cell_count()) {
    throw Error(ErrorCode::Verification, "lift did not produce a single cycle");
  }
  return Tour(std::move(out), t.moves(), std::move(order), true);
}

void check_lift_input(const SitedTour& t, int k, int min_layers) {
  if (!t.tour.closed()) throw Error(ErrorCode::UnsupportedInput, "lift needs a closed tour");
  if (k < min_layers) {
    throw Error(ErrorCode::InvalidLayers,
                "need at least " + std::to_string(min_layers) + " layers, got " +
                    std::to_string(k));
  }
  if (t.alpha_sites.size() < 2 ||
      !supports_disjoint(t.alpha_sites[0], t.alpha_sites[1])) {
    throw Error(ErrorCode::MissingSites, "lift needs two disjoint alpha-sites");
  }
}

bool pairwise_disjoint(std::initializer_list<const Site*> sites) {
  for (auto i = sites.begin(); i != sites.end(); ++i) {
    for (auto j = i + 1; j != sites.end(); ++j) {
      if (!supports_disjoint(**i, **j)) return false;
    }
  }
  return true;
}

// Tour on new dims whose id for every cell follows the axis map.
Tour place_tour(const Tour& t, std::span<const int> dims,
                std::span<const std::size_t> axis_map) {
  const BoardSpec& src = t.board();
  BoardSpec dst(std::vector<int>(dims.begin(), dims.end()));
  std::vector<std::int64_t> stride(src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) {
    if (dst.dim(axis_map[i]) != src.dim(i)) {
      throw Error(ErrorCode::Shape, "axis map does not match board sides");
    }
    stride[i] = dst.stride(axis_map[i]);
  }
  if (src.cell_count() != dst.cell_count()) {
    throw Error(ErrorCode::Shape, "axis map changes the cell count");
  }
  std::vector<CellId> order;
  order.reserve(t.size());
  std::vector<int> c(src.rank());
  for (CellId cell : t.order()) {
    src.decode(cell, c);
    std::int64_t out = 0;
    for (std::size_t i = 0; i < c.size(); ++i) out += (c[i] - 1) * stride[i];
    order.push_back(static_cast<CellId>(out));
  }
  return Tour(std::move(dst), t.moves(), std::move(order), t.closed());
}

}  // namespace

SitedTour place_axes(const SitedTour& t, std::span<const int> dims,
                     std::span<const std::size_t> axis_map) {
  SitedTour out{place_tour(t.tour, dims, axis_map), {}, {}};
  for (const Site& s : t.alpha_sites) out.alpha_sites.push_back(follow(out.tour, s, axis_map[s.axis]));
  for (const Site& s : t.beta_sites) out.beta_sites.push_back(follow(out.tour, s, axis_map[s.axis]));
  return out;
}

SitedTour with_sites(const Tour& t) {
  const auto sites = find_sites(t, t.moves().alpha());
  auto pair = disjoint_site_pair(sites);
  if (!pair) throw Error(ErrorCode::MissingSites, "tour is not bi-sited");
  return {t, {pair->first, pair->second}, {}};
}

SitedTour with_generalized_sites(const Tour& t) {
  const MoveParams& mp = t.moves();
  const auto alpha = find_sites(t, mp.alpha());
  const auto beta = find_sites(t, mp.beta());
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    for (std::size_t b = a + 1; b < alpha.size(); ++b) {
      if (!supports_disjoint(alpha[a], alpha[b])) continue;
      for (std::size_t p = 0; p < beta.size(); ++p) {
        if (!pairwise_disjoint({&alpha[a], &alpha[b], &beta[p]})) continue;
        for (std::size_t q = p + 1; q < beta.size(); ++q) {
          if (pairwise_disjoint({&alpha[a], &alpha[b], &beta[p], &beta[q]})) {
            return {t, {alpha[a], alpha[b]}, {beta[p], beta[q]}};
          }
        }
      }
    }
  }
  throw Error(ErrorCode::MissingSites, "no two alpha- and two beta-sites pairwise disjoint");
}

SitedTour lift(const SitedTour& t, int k) {
  if (t.tour.moves().beta() != 1) {
    throw Error(ErrorCode::InvalidMoves, "lift needs beta == 1; use lift_generalized");
  }
  check_lift_input(t, k, 2);
  const Site& s1 = t.alpha_sites[0];
  const Site& s2 = t.alpha_sites[1];
  std::vector<Join> joins;
  for (int j = 1; j < k; ++j) joins.push_back({j % 2 == 1 ? &s1 : &s2, j, j + 1});
  Tour out = assemble(t.tour, k, joins, s1, 2);
  const std::vector<CellId> pos = out.positions();
  SitedTour r{out, {}, {}};
  r.alpha_sites.push_back(relocate(out, pos, s2, 1, k));
  r.alpha_sites.push_back(relocate(out, pos, k % 2 == 0 ? s2 : s1, k, k));
  return r;
}

SitedTour lift(const Tour& t, int k) { return lift(with_sites(t), k); }

std::vector<int> residue_join_order(const MoveParams& mp, int k) {
  const int a = mp.alpha();
  const int b = mp.beta();
  if (std::gcd(a, b) != 1) throw Error(ErrorCode::InvalidMoves, "alpha and beta not coprime");
  auto sequence = [&](int first) {
    std::vector<int> d{first};
    for (int i = 1; i < b; ++i) d.push_back((d.back() + a - 1) % b + 1);
    return d;
  };
  auto fits = [&](const std::vector<int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] + a > k) return false;
    }
    return true;
  };
  std::vector<int> d = sequence(1);
  if (!fits(d)) d = sequence((a - 1) % b + 1);
  return d;
}

SitedTour lift_generalized(const SitedTour& t, int k) {
  const MoveParams& mp = t.tour.moves();
  const int a = mp.alpha();
  const int b = mp.beta();
  if (std::gcd(a, b) != 1) throw Error(ErrorCode::InvalidMoves, "alpha and beta not coprime");
  check_lift_input(t, k, std::max(2, a + b - 1));
  if (b >= 2 && (t.beta_sites.size() < 2 ||
                 !pairwise_disjoint({&t.alpha_sites[0], &t.alpha_sites[1],
                                     &t.beta_sites[0], &t.beta_sites[1]}))) {
    throw Error(ErrorCode::MissingSites, "need two beta-sites disjoint from the alpha-sites");
  }
  const Site& a1 = t.alpha_sites[0];
  const Site& a2 = t.alpha_sites[1];
  std::vector<Join> joins;
  for (int cls = 1; cls <= b; ++cls) {
    int c = 1;
    for (int lower = cls; lower + b <= k; lower += b, ++c) {
      joins.push_back({c % 2 == 1 ? &a1 : &a2, lower, lower + b});
    }
  }
  if (b >= 2) {
    const std::vector<int> d = residue_join_order(mp, k);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      joins.push_back({&t.beta_sites[0], d[i], d[i] + a});
    }
  }
  Tour out = assemble(t.tour, k, joins, a1, 1 + b);
  const std::vector<CellId> pos = out.positions();
  SitedTour r{out, {}, {}};
  const int last_join = (k - 1) / b;
  const int top = 1 + last_join * b;
  r.alpha_sites.push_back(relocate(out, pos, a2, 1, k));
  r.alpha_sites.push_back(relocate(out, pos, last_join % 2 == 1 ? a2 : a1, top, k));
  if (t.beta_sites.size() >= 2) {
    r.beta_sites.push_back(relocate(out, pos, t.beta_sites[1], 1, k));
    r.beta_sites.push_back(relocate(out, pos, t.beta_sites[1], k, k));
  }
  return r;
}

SitedTour lift_generalized(const Tour& t, int k) {
  if (t.moves().beta() == 1) return lift_generalized(with_sites(t), k);
  return lift_generalized(with_generalized_sites(t), k);
}

Tour glue(const Tour& a, const Tour& b, std::size_t axis, int offset) {
  const BoardSpec& ba = a.board();
  const BoardSpec& bb = b.board();
  if (!a.closed() || !b.closed()) {
    throw Error(ErrorCode::UnsupportedInput, "glue needs closed tours");
  }
  if (ba.rank() != bb.rank() || axis >= ba.rank() || !(a.moves() == b.moves())) {
    throw Error(ErrorCode::Shape, "glue needs boards of equal rank and moves");
  }
  for (std::size_t i = 0; i < ba.rank(); ++i) {
    if (i != axis && ba.dim(i) != bb.dim(i)) {
      throw Error(ErrorCode::Shape, "glued boards differ off the glue axis");
    }
  }
  if (offset != ba.dim(axis)) {
    throw Error(ErrorCode::NotGluable, "offset " + std::to_string(offset) +
                                           " leaves a gap or overlap on axis " +
                                           std::to_string(axis));
  }
  std::vector<int> dims(ba.dims().begin(), ba.dims().end());
  dims[axis] += bb.dim(axis);
  BoardSpec out(dims);
  const std::int64_t shift = static_cast<std::int64_t>(offset) * out.stride(axis);
  auto map_into = [&](const BoardSpec& src, CellId id, std::int64_t extra) {
    std::int64_t r = extra;
    for (std::size_t i = 0; i < src.rank(); ++i) r += (src.coord(id, i) - 1) * out.stride(i);
    return static_cast<CellId>(r);
  };
  std::vector<CellId> ma(a.size());
  std::vector<CellId> mb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ma[i] = map_into(ba, a.at(i), 0);
  for (std::size_t i = 0; i < b.size(); ++i) mb[i] = map_into(bb, b.at(i), shift);

  EdgeGraph g(out.cell_count());
  g.add_path(ma, true);
  g.add_path(mb, true);
  std::vector<CellId> posb(out.cell_count(), kNoCell);
  for (std::size_t i = 0; i < mb.size(); ++i) posb[mb[i]] = static_cast<CellId>(i);

  const MoveGraph mg(out, a.moves());
  const int reach = a.moves().alpha();
  const auto in_b = [&](CellId c) { return out.coord(c, axis) > offset; };
  const auto near = [&](CellId c) { return out.coord(c, axis) > offset - reach; };
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const CellId u = ma[i];
    const CellId v = ma[(i + 1) % ma.size()];
    if (!near(u) || !near(v)) continue;
    std::size_t best = kNoCell;
    CellId bx = kNoCell;
    CellId by = kNoCell;
    mg.for_each_neighbor(u, [&](CellId x) {
      if (!in_b(x)) return;
      mg.for_each_neighbor(v, [&](CellId y) {
        if (y == x || !in_b(y) || !g.has_edge(x, y)) return;
        const std::size_t e = edge_position(posb, mb.size(), x, y);
        if (e < best) {
          best = e;
          bx = x;
          by = y;
        }
      });
    });
    if (bx == kNoCell) continue;
    g.remove_edge(u, v);
    g.remove_edge(bx, by);
    g.add_edge(u, bx);
    g.add_edge(v, by);
    std::vector<CellId> order = g.walk(ma[0]);
    Tour t(std::move(out), a.moves(), std::move(order), true);
    check_valid(t, "glue");
    return t;
  }
  throw Error(ErrorCode::NotGluable, "no compatible edge pair across the glue face");
}

Tour build_extender(int m, BaseBlockLibrary& lib) {
  if (m < 3 || m == 4) {
    throw Error(ErrorCode::NoExtender, "no seeded 4 x " + std::to_string(m) + " extender");
  }
  if (m == 3 || m == 5 || m == 7) return lib.get(extender_block_name(m));
  const Tour prev = build_extender(m - 3, lib);
  const Tour& pattern = lib.get(kExtendingPatternName);
  const int base = m - 3;
  BoardSpec board({4, m});
  const auto local = [&](const Tour& t, std::size_t i, int col_shift) {
    const Cell c = t.cell(i);
    return board.index_of(Cell{c[0], c[1] + col_shift});
  };
  const BoardSpec& pb = pattern.board();
  const CellId split = pb.index_of(Cell{3, 1});
  std::vector<CellId> order;
  order.reserve(board.cell_count());
  std::size_t i = 0;
  for (; i < pattern.size(); ++i) {
    order.push_back(local(pattern, i, base));
    if (pattern.at(i) == split) break;
  }
  for (std::size_t j = prev.size(); j-- > 0;) order.push_back(local(prev, j, 0));
  for (++i; i < pattern.size(); ++i) order.push_back(local(pattern, i, base));
  Tour t(std::move(board), {}, std::move(order), false);
  check_valid(t, "extender");
  if (!is_seeded(t)) throw Error(ErrorCode::Verification, "extender lost a seed edge");
  return t;
}

Tour extend_seeded(const Tour& t, std::size_t axis, BaseBlockLibrary& lib) {
  if (t.board().rank() != 2 || axis > 1) {
    throw Error(ErrorCode::Shape, "seeded extension works on 2D tours along axis 0 or 1");
  }
  if (axis == 1) return transposed(extend_seeded(transposed(t), 0, lib));
  if (!is_seeded(t)) throw Error(ErrorCode::NotSeeded, "tour lacks a seed edge");
  const int rows = t.board().dim(0);
  const int cols = t.board().dim(1);
  const Tour ext = build_extender(cols, lib);
  BoardSpec board({rows + 4, cols});
  const CellId shift = static_cast<CellId>(4 * cols);
  EdgeGraph g(board.cell_count());
  g.add_path(ext.order(), false);
  std::vector<CellId> old(t.order().begin(), t.order().end());
  for (CellId& c : old) c += shift;
  g.add_path(old, t.closed());
  const auto at = [&](int r, int c) { return board.index_of(Cell{r, c}); };
  g.remove_edge(at(5, cols - 2), at(6, cols));
  g.add_edge(at(4, cols), at(5, cols - 2));
  g.add_edge(at(6, cols), at(4, cols - 1));
  std::vector<CellId> order = g.walk(old.front());
  Tour out(std::move(board), t.moves(), std::move(order), t.closed());
  if (auto v = verify(out); v || out.size() != out.board().cell_count()) {
    throw Error(ErrorCode::Verification, "seeded extension failed");
  }
  return out;
}

Tour stack_open_pair(const Tour& t) {
  const BoardSpec& b = t.board();
  if (t.closed() || b.rank() != 2 || t.size() != b.cell_count()) {
    throw Error(ErrorCode::EndpointMismatch, "stacking needs an open 2D tour");
  }
  const int n = b.dim(0);
  const int m = b.dim(1);
  if (m < 3 || t.at(0) != b.index_of(Cell{n, m}) ||
      t.at(t.size() - 1) != b.index_of(Cell{n, m - 2})) {
    throw Error(ErrorCode::EndpointMismatch, "open tour must run from (n,m) to (n,m-2)");
  }
  std::vector<CellId> order;
  order.reserve(2 * t.size());
  for (int layer = 0; layer < 2; ++layer) {
    for (CellId c : t.order()) order.push_back(c * 2 + layer);
  }
  Tour out(BoardSpec({n, m, 2}), t.moves(), std::move(order), true);
  check_valid(out, "stacked open pair");
  return out;
}

SitedTour Constructor::build_2d(int rows, int cols) {
  static const std::vector<std::pair<int, int>> bases = {
      {3, 10}, {3, 12}, {5, 6}, {5, 8}, {6, 6}, {6, 7}, {6, 8}, {7, 8}, {8, 8}};
  for (auto [p, q] : bases) {
    for (bool flip : {false, true}) {
      const int r0 = flip ? q : p;
      const int c0 = flip ? p : q;
      if (r0 > rows || c0 > cols || (rows - r0) % 4 != 0 || (cols - c0) % 4 != 0) continue;
      Tour t = lib_.get(seeded_block_name(p, q));
      if (flip) t = transposed(t);
      trace_.push_back("seeded base " + dims_text(t.board().dims()));
      while (t.board().dim(0) < rows) t = extend_seeded(t, 0, lib_);
      while (t.board().dim(1) < cols) t = extend_seeded(t, 1, lib_);
      if (rows != r0 || cols != c0) {
        trace_.push_back("extended to " + dims_text(t.board().dims()));
      }
      return with_sites(t);
    }
  }
  throw Error(ErrorCode::NotTourable, "no seeded base for " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
}

namespace {

bool face_tourable(int x, int y) { return classify_2d(x, y).tourable; }

// Block lengths along the long axis for each glued family.
std::vector<int> decompose(int x, int y, int length) {
  std::vector<int> parts;
  if ((x == 4 && (y == 3 || y == 4))) {
    if (length % 2 == 1) {
      parts.push_back(3);
      length -= 3;
    }
    parts.insert(parts.end(), length / 2, 2);
  } else if (x == 4 && y == 2) {
    if (length % 3 == 1) {
      parts.push_back(4);
      length -= 4;
    } else if (length % 3 == 2) {
      parts.push_back(5);
      length -= 5;
    }
    parts.insert(parts.end(), length / 3, 3);
  } else if (x == 3 && y == 2) {
    const int extra = length % 4;
    if (extra != 0) {
      parts.push_back(4 + extra);
      length -= 4 + extra;
    }
    parts.insert(parts.end(), length / 4, 4);
  } else if (x == 3 && y == 3) {
    if (length == 6) {
      parts.push_back(6);
    } else {
      parts.insert(parts.end(), length / 4, 4);
    }
  }
  return parts;
}

}  // namespace

SitedTour Constructor::build_3d(const std::vector<int>& d) {
  const int a = d[0];
  const int b = d[1];
  const int c = d[2];
  struct Face {
    int x, y, rest;
    std::array<std::size_t, 3> map;
  };
  const Face faces[] = {{a, b, c, {0, 1, 2}}, {a, c, b, {0, 2, 1}}, {b, c, a, {1, 2, 0}}};
  for (const Face& f : faces) {
    if (!face_tourable(f.x, f.y)) continue;
    SitedTour base = build_sorted({f.x, f.y});
    trace_.push_back("lift " + std::to_string(f.x) + "x" + std::to_string(f.y) + " by " +
                     std::to_string(f.rest));
    SitedTour lifted = lift(base, f.rest);
    return place_axes(lifted, d, f.map);
  }
  const std::array<std::size_t, 3> to_sorted{1, 2, 0};
  if ((a == 2 || a == 4) && b % 2 == 1 && c % 2 == 1 && b >= 5) {
    const int n0 = b % 4 == 1 ? 5 : 7;
    const int m0 = c % 4 == 1 ? 5 : 7;
    Tour open = lib_.get(open_block_name(n0, m0));
    trace_.push_back("open seeded base " + dims_text(open.board().dims()));
    while (open.board().dim(0) < b) open = extend_seeded(open, 0, lib_);
    while (open.board().dim(1) < c) open = extend_seeded(open, 1, lib_);
    Tour t = stack_open_pair(open);
    trace_.push_back("stacked open pair " + dims_text(t.board().dims()));
    if (a == 4) {
      t = glue(t, t, 2, 2);
      trace_.push_back("glued to " + dims_text(t.board().dims()));
    }
    return place_axes(with_sites(t), d, to_sorted);
  }
  int x = b;
  int y = a;
  if (a == 3 && b == 3) x = 3, y = 3;
  if (a == 4 && b == 4) x = 4, y = 4;
  const std::vector<int> parts = decompose(x, y, c);
  if (parts.empty()) {
    throw Error(ErrorCode::NotTourable, "no construction for " + dims_text(d));
  }
  std::optional<Tour> t;
  for (int len : parts) {
    const std::vector<int> block_dims{x, y, len};
    const Tour& block = lib_.get(bisited_block_name(block_dims));
    t = t ? glue(*t, block, 2, t->board().dim(2)) : block;
  }
  trace_.push_back("glued blocks " + std::to_string(x) + "x" + std::to_string(y) + " lengths " +
                   [&] {
                     std::string s;
                     for (int len : parts) s += (s.empty() ? "" : "+") + std::to_string(len);
                     return s;
                   }());
  SitedTour st = with_sites(*t);
  const std::array<std::size_t, 3> swap01{1, 0, 2};
  return x == y ? st : place_axes(st, d, swap01);
}

SitedTour Constructor::build_sorted(const std::vector<int>& d) {
  if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  SitedTour result = [&] {
    if (d.size() == 2) return build_2d(d[0], d[1]);
    if (d.size() == 3) return build_3d(d);
    std::size_t drop = 0;
    const auto evens = std::count_if(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
    if (evens == 1) {
      drop = static_cast<std::size_t>(
          std::find_if(d.begin(), d.end(), [](int x) { return x % 2 == 1; }) - d.begin());
    }
    std::vector<int> rest = d;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    SitedTour sub = build_sorted(rest);
    trace_.push_back("lift " + dims_text(rest) + " by " + std::to_string(d[drop]));
    SitedTour lifted = lift(sub, d[drop]);
    std::vector<std::size_t> map(d.size());
    for (std::size_t j = 0; j < rest.size(); ++j) map[j] = j < drop ? j : j + 1;
    map.back() = drop;
    return place_axes(lifted, d, map);
  }();
  memo_.emplace(d, result);
  return result;
}

SitedTour Constructor::build(const BoardSpec& b) {
  trace_.clear();
  const Verdict v = classify_nd(b);
  if (!v.tourable) {
    throw NotTourableError(v, "board " + dims_text(b.dims()) + " has no closed tour (" +
                                  std::string(to_string(v.reason)) + ")");
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (b.dim(i) > 1) kept.push_back(i);
  }
  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return b.dim(kept[x]) < b.dim(kept[y]);
  });
  std::vector<int> sorted;
  std::vector<std::size_t> map;
  for (std::size_t i : order) {
    sorted.push_back(b.dim(kept[i]));
    map.push_back(kept[i]);
  }
  SitedTour st = build_sorted(sorted);
  SitedTour out = place_axes(st, b.dims(), map);
  check_valid(out.tour, "constructed tour");
  return out;
}

SitedTour construct_2d(int m, int n, BaseBlockLibrary& lib) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidBoard, "sides must be positive");
  const Verdict v = classify_2d(m, n);
  if (!v.tourable) {
    throw NotTourableError(v, std::to_string(m) + "x" + std::to_string(n) +
                                  " has no closed tour (" + std::string(to_string(v.reason)) + ")");
  }
  return Constructor(lib).build(BoardSpec({m, n}));
}

SitedTour construct_3d(int m, int n, int p, BaseBlockLibrary& lib) {
  if (m < 1 || n < 1 || p < 1) throw Error(ErrorCode::InvalidBoard, "sides must be positive");
  return Constructor(lib).build(BoardSpec({m, n, p}));
}

Tour construct_nd(const BoardSpec& b, BaseBlockLibrary& lib) {
  return Constructor(lib).build(b).tour;
}

}  // namespace hk
