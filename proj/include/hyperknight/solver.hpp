#pragma once

// Knight-graph front end of the Hamiltonian search: builds the move graph of
// a board, applies cell/edge constraints and reports infeasibility
// certificates that settle a board without searching.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknight/board.hpp"
#include "hyperknight/hamilton.hpp"
#include "hyperknight/tour.hpp"

namespace hk {

using CellEdge = std::pair<Cell, Cell>;

struct SearchConstraints {
  std::vector<CellEdge> required_edges;
  std::vector<CellEdge> forbidden_edges;
  std::optional<Cell> start;
  std::optional<Cell> end;
  bool closed = true;
};

enum class CertificateKind { OddCellCount, Disconnected, DegreeZeroCell, DegreeOneForcing };

std::string_view to_string(CertificateKind k);
std::string_view to_string(SearchStatus s);

struct Certificate {
  CertificateKind kind;
  std::optional<Cell> cell;
  std::string detail;
};

/// Reasons the move graph of `b` has no Hamiltonian cycle.
std::vector<Certificate> prune_checks(const BoardSpec& b, const MoveParams& mp);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Tour> tour;
  std::vector<Certificate> certificates;
  std::uint64_t nodes = 0;
};

using TourFilter = std::function<bool(const Tour&)>;

/// Throws Error(ConstraintConflict) for contradictory constraints, e.g. a
/// required edge that is also forbidden or is not a move.
SearchResult solve(const BoardSpec& b, const MoveParams& mp,
                   const SearchConstraints& c, const SearchBudget& budget,
                   const TourFilter& accept = {});

/// True when every constraint of `c` holds on `t`.
bool satisfies(const Tour& t, const SearchConstraints& c);

}  // namespace hk
