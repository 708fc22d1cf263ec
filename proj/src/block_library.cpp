#include "hyperknight/block_library.hpp"

#include <cstdlib>

#include "hyperknight/constructor.hpp"
#include "hyperknight/error.hpp"
#include "hyperknight/sites.hpp"
#include "hyperknight/tour_io.hpp"

namespace hk {

namespace {

constexpr const char* kSolverVersion = "hyperknight-dfs-1";

std::string dims_text(std::span<const int> dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(dims[i]);
  }
  return s;
}

std::vector<BlockRecipe> make_recipes() {
  std::vector<BlockRecipe> out;
  for (auto [r, c] : std::vector<std::pair<int, int>>{
           {3, 10}, {3, 12}, {5, 6}, {5, 8}, {6, 6}, {6, 7}, {6, 8}, {7, 8}, {8, 8}}) {
    out.push_back({seeded_block_name(r, c), BlockKind::SeededClosed, {r, c}});
  }
  for (int m : {3, 5, 7}) {
    out.push_back({extender_block_name(m), BlockKind::Extender, {4, m}});
  }
  out.push_back({kExtendingPatternName, BlockKind::ExtendingPattern, {4, 3}});
  for (auto [r, c] : std::vector<std::pair<int, int>>{{5, 5}, {5, 7}, {7, 5}, {7, 7}}) {
    out.push_back({open_block_name(r, c), BlockKind::SeededOpen, {r, c}});
  }
  for (const auto& d : std::vector<std::vector<int>>{
           {4, 3, 2}, {4, 3, 3}, {4, 4, 2}, {4, 4, 3}, {4, 2, 3}, {4, 2, 4},
           {4, 2, 5}, {3, 2, 4}, {3, 2, 5}, {3, 2, 6}, {3, 2, 7}, {3, 3, 4},
           {3, 3, 6}}) {
    const bool self = d == std::vector<int>{3, 2, 4};
    out.push_back({bisited_block_name(d), BlockKind::BisitedClosed, d, 1, self});
  }
  return out;
}

CellId cell_id(int cols, int r, int c) { return static_cast<CellId>((r - 1) * cols + (c - 1)); }

// Pattern check: P1 from (4,3) to (3,1), then P2 from (2,1) to (4,2),
// together covering the 4 x 3 board and containing ((1,1),(2,3)).
bool pattern_ok(const Tour& t) {
  const BoardSpec& b = t.board();
  if (b.rank() != 2 || b.dim(0) != 4 || b.dim(1) != 3 || t.closed()) return false;
  if (t.size() != 12) return false;
  std::vector<char> seen(12, 0);
  for (CellId id : t.order()) {
    if (seen[id]) return false;
    seen[id] = 1;
  }
  if (t.at(0) != cell_id(3, 4, 3) || t.at(11) != cell_id(3, 4, 2)) return false;
  const CellId split_a = cell_id(3, 3, 1);
  const CellId split_b = cell_id(3, 2, 1);
  bool split = false;
  for (std::size_t i = 0; i + 1 < 12; ++i) {
    if (t.at(i) == split_a && t.at(i + 1) == split_b) {
      split = true;
      continue;
    }
    if (!is_edge(b, t.at(i), t.at(i + 1), t.moves())) return false;
  }
  return split && has_edge(t, {1, 1}, {2, 3});
}

Tour derive_pattern(const BlockRecipe& r, const SearchBudget& budget) {
  const BoardSpec b({4, 3});
  const MoveGraph mg(b, {});
  std::vector<std::vector<Vertex>> adj(12);
  for (CellId v = 0; v < 12; ++v) mg.for_each_neighbor(v, [&](CellId w) { adj[v].push_back(w); });
  const CellId split_a = cell_id(3, 3, 1);
  const CellId split_b = cell_id(3, 2, 1);
  adj[split_a].push_back(split_b);
  adj[split_b].push_back(split_a);
  PathProblem p;
  p.graph = SearchGraph(adj);
  p.closed = false;
  p.start = cell_id(3, 4, 3);
  p.end = cell_id(3, 4, 2);
  p.required = {{split_a, split_b}, {cell_id(3, 1, 1), cell_id(3, 2, 3)}};
  auto ordered = [&](std::span<const Vertex> order) {
    auto a = std::find(order.begin(), order.end(), split_a);
    return a + 1 != order.end() && *(a + 1) == split_b;
  };
  PathResult res = find_hamiltonian(p, budget, ordered);
  if (res.status != SearchStatus::Found) {
    throw Error(ErrorCode::NotTourable, "no extending pattern found for " + r.name);
  }
  return Tour(b, {}, std::vector<CellId>(res.order.begin(), res.order.end()), false);
}

bool glues_to_itself(const Tour& t) {
  try {
    const std::size_t last = t.board().rank() - 1;
    return is_bisited(glue(t, t, last, t.board().dim(last)));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::SeededClosed: return "seeded-closed";
    case BlockKind::Extender: return "extender";
    case BlockKind::ExtendingPattern: return "extending-pattern";
    case BlockKind::SeededOpen: return "seeded-open";
    case BlockKind::BisitedClosed: return "bisited-closed";
  }
  return "?";
}

std::string seeded_block_name(int rows, int cols) {
  return "seeded-" + std::to_string(rows) + "x" + std::to_string(cols);
}
std::string extender_block_name(int m) { return "extender-4x" + std::to_string(m); }
std::string open_block_name(int rows, int cols) {
  return "open-" + std::to_string(rows) + "x" + std::to_string(cols);
}
std::string bisited_block_name(std::span<const int> dims) {
  return "bisited-" + dims_text(dims);
}

const std::vector<BlockRecipe>& block_recipes() {
  static const std::vector<BlockRecipe> recipes = make_recipes();
  return recipes;
}

const BlockRecipe& block_recipe(const std::string& name) {
  for (const auto& r : block_recipes()) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::UnsupportedInput, "unknown block '" + name + "'");
}

std::vector<CellEdge> seed_edges(int rows, int cols) {
  return {{{1, cols - 2}, {2, cols}}, {{rows - 2, 1}, {rows, 2}}};
}

bool has_edge(const Tour& t, const Cell& a, const Cell& b) {
  const BoardSpec& board = t.board();
  if (!board.contains(a) || !board.contains(b)) return false;
  const CellId x = board.index_of(a);
  const CellId y = board.index_of(b);
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const CellId u = t.at(i);
    const CellId v = t.next(i);
    if ((u == x && v == y) || (u == y && v == x)) return true;
  }
  return false;
}

bool is_seeded(const Tour& t) {
  const BoardSpec& b = t.board();
  if (b.rank() != 2 || b.dim(0) < 3 || b.dim(1) < 3) return false;
  for (const auto& [a, c] : seed_edges(b.dim(0), b.dim(1))) {
    if (!has_edge(t, a, c)) return false;
  }
  return true;
}

bool block_satisfies(const BlockRecipe& r, const Tour& t) {
  const auto dims = t.board().dims();
  if (!std::equal(dims.begin(), dims.end(), r.dims.begin(), r.dims.end())) return false;
  if (!t.moves().classical()) return false;
  if (r.kind == BlockKind::ExtendingPattern) return pattern_ok(t);
  if (verify(t) || t.size() != t.board().cell_count()) return false;
  const BoardSpec& b = t.board();
  switch (r.kind) {
    case BlockKind::SeededClosed:
      return t.closed() && is_seeded(t) && is_bisited(t);
    case BlockKind::Extender: {
      const int m = b.dim(1);
      return !t.closed() && is_seeded(t) && t.at(0) == b.index_of(Cell{4, m}) &&
             t.at(t.size() - 1) == b.index_of(Cell{4, m - 1});
    }
    case BlockKind::SeededOpen: {
      const int n = b.dim(0);
      const int m = b.dim(1);
      return !t.closed() && is_seeded(t) && t.at(0) == b.index_of(Cell{n, m}) &&
             t.at(t.size() - 1) == b.index_of(Cell{n, m - 2});
    }
    case BlockKind::BisitedClosed:
      return t.closed() && is_bisited(t) && (!r.self_gluable || glues_to_itself(t));
    case BlockKind::ExtendingPattern:
      break;
  }
  return false;
}

Tour derive_block(const BlockRecipe& r, std::chrono::milliseconds time_limit) {
  SearchBudget budget;
  budget.seed = r.seed;
  budget.time_limit = time_limit;
  if (r.kind == BlockKind::ExtendingPattern) return derive_pattern(r, budget);

  const BoardSpec board(r.dims);
  SearchConstraints c;
  TourFilter accept;
  switch (r.kind) {
    case BlockKind::SeededClosed:
      c.required_edges = seed_edges(r.dims[0], r.dims[1]);
      accept = [](const Tour& t) { return is_bisited(t); };
      break;
    case BlockKind::Extender:
      c.closed = false;
      c.start = Cell{4, r.dims[1]};
      c.end = Cell{4, r.dims[1] - 1};
      c.required_edges = seed_edges(4, r.dims[1]);
      break;
    case BlockKind::SeededOpen:
      c.closed = false;
      c.start = Cell{r.dims[0], r.dims[1]};
      c.end = Cell{r.dims[0], r.dims[1] - 2};
      c.required_edges = seed_edges(r.dims[0], r.dims[1]);
      break;
    case BlockKind::BisitedClosed:
      accept = [&r](const Tour& t) {
        return is_bisited(t) && (!r.self_gluable || glues_to_itself(t));
      };
      break;
    case BlockKind::ExtendingPattern:
      break;
  }
  SearchResult res = solve(board, {}, c, budget, accept);
  if (!res.tour) {
    throw Error(ErrorCode::NotTourable, "could not derive block " + r.name + " (" +
                                            std::string(to_string(res.status)) + ")");
  }
  if (!block_satisfies(r, *res.tour)) {
    throw Error(ErrorCode::Verification, "derived block " + r.name + " fails its checks");
  }
  return *res.tour;
}

BaseBlockLibrary::BaseBlockLibrary(std::optional<std::filesystem::path> dir)
    : dir_(std::move(dir)) {}

BaseBlockLibrary& BaseBlockLibrary::shared() {
  static BaseBlockLibrary lib([]() -> std::optional<std::filesystem::path> {
    const char* env = std::getenv("HYPERKNIGHT_BLOCK_DIR");
    std::filesystem::path dir = env && *env ? env : "blocks";
    std::error_code ec;
    if (std::filesystem::is_directory(dir, ec)) return dir;
    return std::nullopt;
  }());
  return lib;
}

std::optional<Tour> BaseBlockLibrary::load(const BlockRecipe& r) const {
  if (!dir_) return std::nullopt;
  const auto path = *dir_ / (r.name + ".json");
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const bool plain = r.kind != BlockKind::ExtendingPattern;
    TourDocument doc = import_json(read_text_file(path), plain);
    if (block_satisfies(r, doc.tour)) return std::move(doc.tour);
  } catch (const Error&) {
  }
  return std::nullopt;
}

const Tour& BaseBlockLibrary::get(const std::string& name) {
  std::lock_guard lock(mu_);
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  const BlockRecipe& r = block_recipe(name);
  std::optional<Tour> t = load(r);
  if (!t) t = derive_block(r);
  return cache_.emplace(name, std::move(*t)).first->second;
}

std::vector<std::string> BaseBlockLibrary::regenerate(
    const std::filesystem::path& dir, const std::optional<std::string>& only) {
  std::filesystem::create_directories(dir);
  const auto manifest_path = dir / "manifest.json";
  nlohmann::json manifest = {{"schema_version", kSchemaVersion},
                             {"solver_version", kSolverVersion},
                             {"blocks", nlohmann::json::object()}};
  std::error_code ec;
  if (only && std::filesystem::exists(manifest_path, ec)) {
    try {
      auto old = nlohmann::json::parse(read_text_file(manifest_path));
      if (old.contains("blocks") && old["blocks"].is_object()) manifest["blocks"] = old["blocks"];
    } catch (const nlohmann::json::exception&) {
    }
  }
  std::vector<std::string> written;
  for (const BlockRecipe& r : block_recipes()) {
    if (only && r.name != *only) continue;
    const Tour t = derive_block(r);
    nlohmann::json constraints = nlohmann::json::array();
    switch (r.kind) {
      case BlockKind::SeededClosed: constraints = {"closed", "seeded", "bisited"}; break;
      case BlockKind::Extender: constraints = {"open", "seeded", "start=(4,m)", "end=(4,m-1)"}; break;
      case BlockKind::ExtendingPattern:
        constraints = {"P1 (4,3)->(2,1)", "P2 (3,1)->(4,2)", "edge (1,1)-(2,3)"};
        break;
      case BlockKind::SeededOpen: constraints = {"open", "seeded", "start=(n,m)", "end=(n,m-2)"}; break;
      case BlockKind::BisitedClosed: constraints = {"closed", "bisited"}; break;
    }
    nlohmann::json meta = {{"generator", "hyperknight blocks regenerate"},
                           {"block", r.name},
                           {"kind", std::string(to_string(r.kind))},
                           {"seed", r.seed},
                           {"solver_version", kSolverVersion},
                           {"constraints", constraints}};
    const std::string file = r.name + ".json";
    write_text_file(dir / file,
                    export_json(t, meta, r.kind != BlockKind::ExtendingPattern));
    manifest["blocks"][r.name] = {{"file", file},
                                  {"kind", std::string(to_string(r.kind))},
                                  {"dims", r.dims},
                                  {"seed", r.seed},
                                  {"constraints", constraints}};
    written.push_back(r.name);
  }
  if (only && written.empty()) {
    throw Error(ErrorCode::UnsupportedInput, "unknown block '" + *only + "'");
  }
  write_text_file(manifest_path, manifest.dump(2) + "\n");
  return written;
}

}  // namespace hk
