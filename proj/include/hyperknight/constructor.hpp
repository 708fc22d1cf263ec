#pragma once

// Tour construction. Small boards come from the block library; larger
// ones are grown by seeded extension (2D), by gluing blocks along an axis
// (3D), and by lifting a tour through two disjoint sites into one more
// dimension.

#include <map>
#include <string>
#include <vector>

#include "hyperknight/block_library.hpp"
#include "hyperknight/error.hpp"
#include "hyperknight/feasibility.hpp"
#include "hyperknight/sites.hpp"
#include "hyperknight/tour.hpp"

namespace hk {

/// A closed tour with the sites reserved for the next lift.
struct SitedTour {
  Tour tour;
  /// Two alpha-sites with disjoint supports.
  std::vector<Site> alpha_sites;
  /// Two beta-sites, disjoint from each other and from the alpha-sites;
  /// only kept for moves with beta >= 2.
  std::vector<Site> beta_sites;
};

class NotTourableError : public Error {
 public:
  NotTourableError(const Verdict& v, const std::string& what)
      : Error(ErrorCode::NotTourable, what), verdict_(v) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// First disjoint pair of alpha-sites. Throws MissingSites.
SitedTour with_sites(const Tour& t);
/// Two alpha-sites and two beta-sites, pairwise disjoint, first in site
/// order. Throws MissingSites.
SitedTour with_generalized_sites(const Tour& t);

/// Stacks k copies of a bi-sited tour along a new last axis, joining
/// consecutive layers through the designated sites (first site between
/// layers 1-2, 3-4, ..., second between 2-3, 4-5, ...). The result keeps
/// the second site in layer 1, and in layer k the second site when k is
/// even, the first when k is odd. Needs beta == 1.
/// Throws InvalidLayers for k < 2, MissingSites, InvalidMoves.
SitedTour lift(const SitedTour& t, int k);
SitedTour lift(const Tour& t, int k);

/// Class-joining order d_1..d_beta of the generalized lift: d_i = d_{i-1}
/// + alpha (mod beta) in [1, beta], starting from d_1 = 1, or from alpha
/// mod beta when layer d + alpha of some joining layer d would exceed k.
std::vector<int> residue_join_order(const MoveParams& mp, int k);

/// Generalized lift for (alpha, beta) moves and k >= alpha + beta - 1:
/// layers of equal residue mod beta are chained through the alpha-sites,
/// then the beta chains are joined through the first beta-site.
/// Throws InvalidLayers, MissingSites, InvalidMoves (gcd != 1).
SitedTour lift_generalized(const SitedTour& t, int k);
SitedTour lift_generalized(const Tour& t, int k);

/// Joins two closed tours whose boards differ only along `axis`; b is
/// translated by `offset`, which must equal a's extent on that axis.
/// Throws Shape for mismatched boards, NotGluable when no edge pair works.
Tour glue(const Tour& a, const Tour& b, std::size_t axis, int offset);

/// Seeded open 4 x m tour from (4,m) to (4,m-1). Throws NoExtender for
/// m in {1, 2, 4}.
Tour build_extender(int m, BaseBlockLibrary& lib = BaseBlockLibrary::shared());

/// Grows a seeded tour by four rows (axis 0) or four columns (axis 1).
/// Open tours keep their endpoints. Throws NotSeeded, NoExtender.
Tour extend_seeded(const Tour& t, std::size_t axis,
                   BaseBlockLibrary& lib = BaseBlockLibrary::shared());

/// Two copies of an open n x m tour from (n,m) to (n,m-2), one per layer,
/// closed into an n x m x 2 tour. Throws EndpointMismatch.
Tour stack_open_pair(const Tour& t);

/// Throws NotTourableError for boards the verdict rules out.
SitedTour construct_2d(int m, int n, BaseBlockLibrary& lib = BaseBlockLibrary::shared());
SitedTour construct_3d(int m, int n, int p,
                       BaseBlockLibrary& lib = BaseBlockLibrary::shared());
Tour construct_nd(const BoardSpec& b, BaseBlockLibrary& lib = BaseBlockLibrary::shared());

/// Construction with a memo of every sorted sub-board it has built.
class Constructor {
 public:
  explicit Constructor(BaseBlockLibrary& lib = BaseBlockLibrary::shared()) : lib_(lib) {}

  /// Verified closed tour on `b` with designated sites. Throws
  /// NotTourableError.
  SitedTour build(const BoardSpec& b);

  /// Human-readable steps taken for the most recent top-level build.
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  SitedTour build_sorted(const std::vector<int>& dims);
  SitedTour build_2d(int rows, int cols);
  SitedTour build_3d(const std::vector<int>& dims);

  BaseBlockLibrary& lib_;
  std::map<std::vector<int>, SitedTour> memo_;
  std::vector<std::string> trace_;
};

/// Moves axis i of `t` to axis axis_map[i] of a board with `dims`; every
/// other axis of `dims` must have length 1. Sites follow the tour.
SitedTour place_axes(const SitedTour& t, std::span<const int> dims,
                     std::span<const std::size_t> axis_map);

}  // namespace hk
