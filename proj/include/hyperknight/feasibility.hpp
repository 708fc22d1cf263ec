#pragma once

// Shape-only tourability for the classical (2,1) knight, plus the
// connectivity criteria for generalized moves.

#include <string_view>
#include <vector>

#include "hyperknight/board.hpp"

namespace hk {

enum class VerdictReason {
  AllOdd,
  ThinRows2D,
  Small3xN,
  MeqNeq2_3D,
  M2N3P3_3D,
  SecondLargestIs2,
  LargestIs3,
  OK,
};

enum class Theorem { Schwenk2D, DeMaioMathew3D, MainND };

struct Verdict {
  bool tourable = false;
  VerdictReason reason = VerdictReason::ThinRows2D;
  Theorem theorem = Theorem::Schwenk2D;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view to_string(VerdictReason r);
std::string_view to_string(Theorem t);

/// m x n board; the sides are swapped when m > n.
Verdict classify_2d(int m, int n);
/// Sides are sorted first; a side equal to 1 is dropped and the rest is
/// classified as a 2D board. Throws InvalidBoard for a side < 1.
Verdict classify_3d(int m, int n, int p);
/// Drops unit axes, sorts, then dispatches by the remaining rank. Boards
/// that reduce to fewer than two axes are not tourable (ThinRows2D).
Verdict classify_nd(const BoardSpec& b);

/// Dims with every unit axis removed (may be empty).
std::vector<int> drop_unit_axes(std::span<const int> dims);

/// Closed-form 2D connectivity of the (alpha, beta) move graph: the
/// longer side must be at least 2*alpha, the shorter at least
/// alpha + beta, and gcd(alpha + beta, alpha - beta) must be 1. A single
/// cell counts as connected.
bool knuth_connectivity_2d(int m, int n, const MoveParams& mp);

/// gcd(alpha, beta) == 1, necessary for any (alpha, beta) tour.
bool coprime_necessity(const MoveParams& mp);

}  // namespace hk
