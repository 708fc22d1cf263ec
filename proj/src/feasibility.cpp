#include "hyperknight/feasibility.hpp"

#include <algorithm>
#include <numeric>

#include "hyperknight/error.hpp"

namespace hk {

std::string_view to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::AllOdd: return "AllOdd";
    case VerdictReason::ThinRows2D: return "ThinRows2D";
    case VerdictReason::Small3xN: return "Small3xN";
    case VerdictReason::MeqNeq2_3D: return "MeqNeq2_3D";
    case VerdictReason::M2N3P3_3D: return "M2N3P3_3D";
    case VerdictReason::SecondLargestIs2: return "SecondLargestIs2";
    case VerdictReason::LargestIs3: return "LargestIs3";
    case VerdictReason::OK: return "OK";
  }
  return "?";
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::Schwenk2D: return "Schwenk2D";
    case Theorem::DeMaioMathew3D: return "DeMaioMathew3D";
    case Theorem::MainND: return "MainND";
  }
  return "?";
}

namespace {

Verdict no(VerdictReason r, Theorem t) { return {false, r, t}; }
Verdict yes(Theorem t) { return {true, VerdictReason::OK, t}; }

}  // namespace

std::vector<int> drop_unit_axes(std::span<const int> dims) {
  std::vector<int> out;
  for (int d : dims) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

Verdict classify_2d(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidBoard, "side must be >= 1");
  if (m > n) std::swap(m, n);
  constexpr Theorem t = Theorem::Schwenk2D;
  if (m % 2 == 1 && n % 2 == 1) return no(VerdictReason::AllOdd, t);
  if (m == 1 || m == 2 || m == 4) return no(VerdictReason::ThinRows2D, t);
  if (m == 3 && (n == 4 || n == 6 || n == 8)) {
    return no(VerdictReason::Small3xN, t);
  }
  return yes(t);
}

Verdict classify_3d(int m, int n, int p) {
  if (m < 1 || n < 1 || p < 1) {
    throw Error(ErrorCode::InvalidBoard, "side must be >= 1");
  }
  const int sides[3] = {m, n, p};
  std::vector<int> dims = drop_unit_axes(sides);
  if (dims.size() < 3) {
    if (dims.size() < 2) return no(VerdictReason::ThinRows2D, Theorem::Schwenk2D);
    return classify_2d(dims[0], dims[1]);
  }
  std::sort(dims.begin(), dims.end());
  constexpr Theorem t = Theorem::DeMaioMathew3D;
  if (dims[0] % 2 && dims[1] % 2 && dims[2] % 2) return no(VerdictReason::AllOdd, t);
  if (dims[0] == 2 && dims[1] == 2) return no(VerdictReason::MeqNeq2_3D, t);
  if (dims[0] == 2 && dims[1] == 3 && dims[2] == 3) {
    return no(VerdictReason::M2N3P3_3D, t);
  }
  return yes(t);
}

Verdict classify_nd(const BoardSpec& b) {
  std::vector<int> dims = drop_unit_axes(b.dims());
  if (dims.size() < 2) return no(VerdictReason::ThinRows2D, Theorem::Schwenk2D);
  if (dims.size() == 2) return classify_2d(dims[0], dims[1]);
  if (dims.size() == 3) return classify_3d(dims[0], dims[1], dims[2]);
  std::sort(dims.begin(), dims.end());
  const std::size_t k = dims.size();
  constexpr Theorem t = Theorem::MainND;
  if (std::all_of(dims.begin(), dims.end(), [](int d) { return d % 2 == 1; })) {
    return no(VerdictReason::AllOdd, t);
  }
  if (dims[k - 2] == 2) return no(VerdictReason::SecondLargestIs2, t);
  if (dims[k - 1] == 3) return no(VerdictReason::LargestIs3, t);
  return yes(t);
}

bool knuth_connectivity_2d(int m, int n, const MoveParams& mp) {
  if (m == 1 && n == 1) return true;
  const int longer = std::max(m, n);
  const int shorter = std::min(m, n);
  const int a = mp.alpha();
  const int b = mp.beta();
  return std::gcd(a + b, a - b) == 1 && longer >= 2 * a && shorter >= a + b;
}

bool coprime_necessity(const MoveParams& mp) {
  return std::gcd(mp.alpha(), mp.beta()) == 1;
}

}  // namespace hk
