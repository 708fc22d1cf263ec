#pragma once

// Sites: pairs of tour edges whose endpoints are matched by a pure
// displacement of fixed magnitude along one axis. Two sites with disjoint
// endpoint sets let a tour be stacked into one extra dimension.
//
// With edges (a^n, a^{n+1}) and (a^m, a^{m+1}) a site is
//   well-oriented:     a^{n+1} - a^m = +-(a^{m+1} - a^n)  in {+-d e_i}
//   non-well-oriented: a^{n+1} - a^{m+1} = +-(a^m - a^n)  in {+-d e_i}
// where d is alpha or beta. Classical (2,1) sites of magnitude 2 are tagged
// as parallel or cross patterns by comparing the two move vectors.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperknight/tour.hpp"

namespace hk {

enum class SiteKind { WOPP, NWOPP, WOCP, NWOCP, AlphaSite, BetaSite };
enum class Orientation { Well, NonWell };

std::string_view to_string(SiteKind k);
std::string_view to_string(Orientation o);

struct Site {
  SiteKind kind;
  Orientation orientation;
  std::size_t pos_n;  // edge (a^n, a^{n+1}); pos_n < pos_m
  std::size_t pos_m;  // edge (a^m, a^{m+1})
  std::size_t axis;
  int magnitude;
  /// a^n, a^{n+1}, a^m, a^{m+1}
  std::array<CellId, 4> support;

  /// The two cross pairs (first edge endpoint, second edge endpoint) that
  /// are magnitude * e_axis apart.
  std::array<std::pair<CellId, CellId>, 2> pairing() const;

  friend bool operator==(const Site&, const Site&) = default;
};

/// Every site of magnitude alpha or beta of a closed cycle, ordered by
/// (pos_n, pos_m, magnitude). The cycle need not cover the board.
/// Throws UnsupportedInput for an open tour.
std::vector<Site> find_sites(const Tour& t);
std::vector<Site> find_sites(const Tour& t, int magnitude);

/// Classifies the edge pair (n, m) as a site of the given magnitude.
std::optional<Site> site_at(const Tour& t, std::size_t pos_n, std::size_t pos_m,
                            int magnitude);

bool supports_disjoint(const Site& a, const Site& b);

/// First pair (i < j, in list order) with disjoint supports.
std::optional<std::pair<Site, Site>> disjoint_site_pair(
    std::span<const Site> sites);

/// Bi-sited means two disjoint sites of magnitude alpha, the ones that
/// connect adjacent layers when the move has beta == 1.
bool is_bisited(const Tour& t);

}  // namespace hk
