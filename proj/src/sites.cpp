#include "hyperknight/sites.hpp"

#include <algorithm>
#include <cstdlib>

#include "hyperknight/error.hpp"

namespace hk {

std::string_view to_string(SiteKind k) {
  switch (k) {
    case SiteKind::WOPP: return "WOPP";
    case SiteKind::NWOPP: return "NWOPP";
    case SiteKind::WOCP: return "WOCP";
    case SiteKind::NWOCP: return "NWOCP";
    case SiteKind::AlphaSite: return "AlphaSite";
    case SiteKind::BetaSite: return "BetaSite";
  }
  return "?";
}

std::string_view to_string(Orientation o) {
  return o == Orientation::Well ? "well" : "non-well";
}

std::array<std::pair<CellId, CellId>, 2> Site::pairing() const {
  if (orientation == Orientation::Well) {
    return {{{support[0], support[3]}, {support[1], support[2]}}};
  }
  return {{{support[0], support[2]}, {support[1], support[3]}}};
}

namespace {

// Returns the axis along which a and b differ by exactly `d` (and nowhere
// else), or -1.
int axis_offset(const BoardSpec& b, CellId x, CellId y, int d) {
  int axis = -1;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const int diff = std::abs(b.coord(x, i) - b.coord(y, i));
    if (diff == 0) continue;
    if (diff != d || axis >= 0) return -1;
    axis = static_cast<int>(i);
  }
  return axis;
}

std::vector<int> delta(const BoardSpec& b, CellId from, CellId to) {
  std::vector<int> out(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    out[i] = b.coord(to, i) - b.coord(from, i);
  }
  return out;
}

SiteKind kind_of(const Tour& t, Orientation o, const std::array<CellId, 4>& s,
                 int magnitude) {
  const MoveParams& mp = t.moves();
  if (!mp.classical() || magnitude != 2) {
    return magnitude == mp.alpha() ? SiteKind::AlphaSite : SiteKind::BetaSite;
  }
  const std::vector<int> c = delta(t.board(), s[0], s[1]);
  const std::vector<int> c2 = delta(t.board(), s[2], s[3]);
  if (o == Orientation::Well) {
    std::vector<int> neg = c;
    for (int& v : neg) v = -v;
    return c2 == neg ? SiteKind::WOPP : SiteKind::WOCP;
  }
  return c2 == c ? SiteKind::NWOPP : SiteKind::NWOCP;
}

// The cell `id` shifted by `amount` along `axis`, or kNoCell off board.
CellId shifted(const BoardSpec& b, CellId id, std::size_t axis, int amount) {
  const int c = b.coord(id, axis) + amount;
  if (c < 1 || c > b.dim(axis)) return kNoCell;
  return static_cast<CellId>(static_cast<std::int64_t>(id) +
                             amount * b.stride(axis));
}

void scan(const Tour& t, int d, std::span<const CellId> pos,
          std::vector<Site>& out) {
  const BoardSpec& b = t.board();
  const std::size_t edges = t.size();
  for (std::size_t n = 0; n < edges; ++n) {
    const CellId p = t.at(n);
    const CellId q = t.next(n);
    for (std::size_t axis = 0; axis < b.rank(); ++axis) {
      for (int sign : {-1, 1}) {
        // Well-oriented: a^m = a^{n+1} - s d e_i, a^{m+1} = a^n +- d e_i.
        if (CellId w = shifted(b, q, axis, -sign * d); w != kNoCell) {
          const CellId m = pos[w];
          if (m != kNoCell && m > n) {
            const CellId after = t.next(m);
            if (axis_offset(b, after, p, d) == static_cast<int>(axis)) {
              std::array<CellId, 4> s{p, q, w, after};
              out.push_back({kind_of(t, Orientation::Well, s, d),
                             Orientation::Well, n, m, axis, d, s});
            }
          }
        }
        // Non-well-oriented: a^m = a^n + s d e_i, a^{m+1} = a^{n+1} +- d e_i.
        if (CellId w = shifted(b, p, axis, sign * d); w != kNoCell) {
          const CellId m = pos[w];
          if (m != kNoCell && m > n) {
            const CellId after = t.next(m);
            if (axis_offset(b, after, q, d) == static_cast<int>(axis)) {
              std::array<CellId, 4> s{p, q, w, after};
              out.push_back({kind_of(t, Orientation::NonWell, s, d),
                             Orientation::NonWell, n, m, axis, d, s});
            }
          }
        }
      }
    }
  }
}

void require_closed(const Tour& t) {
  if (!t.closed()) {
    throw Error(ErrorCode::UnsupportedInput, "site detection needs a closed tour");
  }
}

void sort_sites(std::vector<Site>& sites) {
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    if (a.pos_n != b.pos_n) return a.pos_n < b.pos_n;
    if (a.pos_m != b.pos_m) return a.pos_m < b.pos_m;
    return a.magnitude > b.magnitude;
  });
}

}  // namespace

std::vector<Site> find_sites(const Tour& t, int magnitude) {
  require_closed(t);
  std::vector<Site> out;
  if (t.size() < 4) return out;
  const std::vector<CellId> pos = t.positions();
  scan(t, magnitude, pos, out);
  sort_sites(out);
  return out;
}

std::vector<Site> find_sites(const Tour& t) {
  require_closed(t);
  std::vector<Site> out;
  if (t.size() < 4) return out;
  const std::vector<CellId> pos = t.positions();
  scan(t, t.moves().alpha(), pos, out);
  scan(t, t.moves().beta(), pos, out);
  sort_sites(out);
  return out;
}

std::optional<Site> site_at(const Tour& t, std::size_t pos_n, std::size_t pos_m,
                            int magnitude) {
  require_closed(t);
  if (pos_n > pos_m) std::swap(pos_n, pos_m);
  if (pos_n == pos_m || pos_m >= t.size()) return std::nullopt;
  const BoardSpec& b = t.board();
  const std::array<CellId, 4> s{t.at(pos_n), t.next(pos_n), t.at(pos_m),
                                t.next(pos_m)};
  const int well = axis_offset(b, s[1], s[2], magnitude);
  if (well >= 0 && axis_offset(b, s[3], s[0], magnitude) == well) {
    return Site{kind_of(t, Orientation::Well, s, magnitude), Orientation::Well,
                pos_n, pos_m, static_cast<std::size_t>(well), magnitude, s};
  }
  const int nonwell = axis_offset(b, s[2], s[0], magnitude);
  if (nonwell >= 0 && axis_offset(b, s[3], s[1], magnitude) == nonwell) {
    return Site{kind_of(t, Orientation::NonWell, s, magnitude),
                Orientation::NonWell, pos_n, pos_m,
                static_cast<std::size_t>(nonwell), magnitude, s};
  }
  return std::nullopt;
}

bool supports_disjoint(const Site& a, const Site& b) {
  for (CellId x : a.support) {
    for (CellId y : b.support) {
      if (x == y) return false;
    }
  }
  return true;
}

std::optional<std::pair<Site, Site>> disjoint_site_pair(
    std::span<const Site> sites) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (supports_disjoint(sites[i], sites[j])) {
        return std::make_pair(sites[i], sites[j]);
      }
    }
  }
  return std::nullopt;
}

bool is_bisited(const Tour& t) {
  const std::vector<Site> sites = find_sites(t, t.moves().alpha());
  return disjoint_site_pair(sites).has_value();
}

}  // namespace hk
