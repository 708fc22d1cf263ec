#include "hyperknight/solver.hpp"

#include <algorithm>
#include <set>

#include "hyperknight/error.hpp"

namespace hk {

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OddCellCount: return "OddCellCount";
    case CertificateKind::Disconnected: return "Disconnected";
    case CertificateKind::DegreeZeroCell: return "DegreeZeroCell";
    case CertificateKind::DegreeOneForcing: return "DegreeOneForcing";
  }
  return "?";
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ProvedNone: return "ProvedNone";
    case SearchStatus::Exhausted: return "Exhausted";
  }
  return "?";
}

namespace {

using EdgeKey = std::pair<CellId, CellId>;

EdgeKey key(CellId a, CellId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::string cell_text(const Cell& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

SearchGraph knight_graph(const BoardSpec& b, const MoveParams& mp,
                         const std::set<EdgeKey>& forbidden) {
  const MoveGraph mg(b, mp);
  std::vector<std::vector<Vertex>> adj(b.cell_count());
  for (CellId v = 0; v < b.cell_count(); ++v) {
    mg.for_each_neighbor(v, [&](CellId w) {
      if (forbidden.empty() || !forbidden.count(key(v, w))) adj[v].push_back(w);
    });
  }
  return SearchGraph(adj);
}

CellId checked_id(const BoardSpec& b, const Cell& c) {
  if (c.size() != b.rank() || !b.contains(c)) {
    throw Error(ErrorCode::ConstraintConflict, "constraint cell " + cell_text(c) +
                                                   " is not on the board");
  }
  return b.index_of(c);
}

std::vector<Certificate> certificates_of(const BoardSpec& b, const SearchGraph& g) {
  std::vector<Certificate> out;
  const auto colors = g.two_coloring();
  if (!colors.empty()) {
    const auto black = std::count(colors.begin(), colors.end(), 0);
    const auto white = static_cast<std::int64_t>(colors.size()) - black;
    if (black != white) {
      out.push_back({CertificateKind::OddCellCount, std::nullopt,
                     "colour classes of size " + std::to_string(black) + " and " +
                         std::to_string(white)});
    }
  }
  if (g.component_count() > 1) {
    out.push_back({CertificateKind::Disconnected, std::nullopt,
                   std::to_string(g.component_count()) + " components"});
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0) {
      const Cell c = b.cell_at(v);
      out.push_back({CertificateKind::DegreeZeroCell, c, cell_text(c) + " has no move"});
    } else if (g.degree(v) == 1) {
      const Cell c = b.cell_at(v);
      out.push_back({CertificateKind::DegreeOneForcing, c,
                     cell_text(c) + " has a single move"});
    }
  }
  return out;
}

}  // namespace

std::vector<Certificate> prune_checks(const BoardSpec& b, const MoveParams& mp) {
  if (b.cell_count() < 3) {
    return {{CertificateKind::DegreeZeroCell, b.cell_at(0),
             "fewer than three cells"}};
  }
  return certificates_of(b, knight_graph(b, mp, {}));
}

bool satisfies(const Tour& t, const SearchConstraints& c) {
  if (t.closed() != c.closed || t.size() == 0) return false;
  const BoardSpec& b = t.board();
  std::set<EdgeKey> edges;
  for (std::size_t i = 0; i < t.edge_count(); ++i) edges.insert(key(t.at(i), t.next(i)));
  for (const auto& [u, v] : c.required_edges) {
    if (!edges.count(key(b.index_of(u), b.index_of(v)))) return false;
  }
  for (const auto& [u, v] : c.forbidden_edges) {
    if (edges.count(key(b.index_of(u), b.index_of(v)))) return false;
  }
  if (c.start && t.at(0) != b.index_of(*c.start)) return false;
  if (c.end && t.at(t.size() - 1) != b.index_of(*c.end)) return false;
  return true;
}

SearchResult solve(const BoardSpec& b, const MoveParams& mp,
                   const SearchConstraints& c, const SearchBudget& budget,
                   const TourFilter& accept) {
  std::set<EdgeKey> forbidden;
  for (const auto& [u, v] : c.forbidden_edges) {
    forbidden.insert(key(checked_id(b, u), checked_id(b, v)));
  }
  PathProblem problem;
  problem.closed = c.closed;
  for (const auto& [u, v] : c.required_edges) {
    const CellId a = checked_id(b, u);
    const CellId d = checked_id(b, v);
    if (forbidden.count(key(a, d))) {
      throw Error(ErrorCode::ConstraintConflict, "edge both required and forbidden");
    }
    if (!is_edge(b, a, d, mp)) {
      throw Error(ErrorCode::ConstraintConflict, "required edge " + cell_text(u) +
                                                     "-" + cell_text(v) +
                                                     " is not a move");
    }
    problem.required.emplace_back(a, d);
  }
  if (c.start) problem.start = checked_id(b, *c.start);
  if (c.end) problem.end = checked_id(b, *c.end);
  problem.graph = knight_graph(b, mp, forbidden);

  SearchResult result;
  if (c.closed) {
    result.certificates = b.cell_count() < 3 ? prune_checks(b, mp)
                                             : certificates_of(b, problem.graph);
    if (!result.certificates.empty()) {
      result.status = SearchStatus::ProvedNone;
      return result;
    }
  }

  PathFilter filter;
  if (accept) {
    filter = [&](std::span<const Vertex> order) {
      return accept(Tour(b, mp, std::vector<CellId>(order.begin(), order.end()),
                         c.closed));
    };
  }
  PathResult r = find_hamiltonian(problem, budget, filter);
  result.status = r.status;
  result.nodes = r.nodes;
  if (r.status == SearchStatus::Found) {
    Tour t(b, mp, std::move(r.order), c.closed);
    if (auto v = verify(t)) {
      throw Error(ErrorCode::Verification, "solver produced an invalid tour: " + v->detail);
    }
    if (!c.closed && t.size() != b.cell_count()) {
      throw Error(ErrorCode::Verification, "solver path misses cells");
    }
    if (!satisfies(t, c)) {
      throw Error(ErrorCode::Verification, "solver tour breaks a constraint");
    }
    result.tour = std::move(t);
  }
  return result;
}

}  // namespace hk
