#pragma once

// Small base tours the constructor starts from. Every block is derived by
// a constrained solver run with a fixed seed, so the library is
// reproducible without stored data. A block directory (JSON tours plus a
// manifest) can hold pre-derived copies; `regenerate` is its only writer.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyperknight/hamilton.hpp"
#include "hyperknight/solver.hpp"
#include "hyperknight/tour.hpp"

namespace hk {

enum class BlockKind {
  SeededClosed,      // closed, both seed edges, bi-sited
  Extender,          // open 4 x m from (4,m) to (4,m-1), seeded
  ExtendingPattern,  // 4 x 3 pair of paths, stored back to back
  SeededOpen,        // open n x m from (n,m) to (n,m-2), seeded
  BisitedClosed,     // closed and bi-sited
};

std::string_view to_string(BlockKind k);

struct BlockRecipe {
  std::string name;
  BlockKind kind;
  std::vector<int> dims;
  std::uint64_t seed = 1;
  /// Two copies must glue end to end along the last axis (3 x 2 x 4, the
  /// only block stacked with itself at the smallest length).
  bool self_gluable = false;
};

/// Every block the constructor uses, in a fixed order.
const std::vector<BlockRecipe>& block_recipes();
/// Throws Error(UnsupportedInput) for an unknown name.
const BlockRecipe& block_recipe(const std::string& name);

std::string seeded_block_name(int rows, int cols);
std::string extender_block_name(int m);
std::string open_block_name(int rows, int cols);
std::string bisited_block_name(std::span<const int> dims);
inline constexpr const char* kExtendingPatternName = "extending-pattern";

/// The two seed edges of a rows x cols board:
/// ((1, cols-2), (2, cols)) and ((rows-2, 1), (rows, 2)).
std::vector<CellEdge> seed_edges(int rows, int cols);
bool has_edge(const Tour& t, const Cell& a, const Cell& b);
bool is_seeded(const Tour& t);

/// True when `t` is a valid block for `r`.
bool block_satisfies(const BlockRecipe& r, const Tour& t);

/// Derives a block with the solver. Throws Error(NotTourable) if the search
/// budget runs out.
Tour derive_block(const BlockRecipe& r,
                  std::chrono::milliseconds time_limit = std::chrono::minutes(2));

class BaseBlockLibrary {
 public:
  /// Without a directory every block is derived on first use.
  explicit BaseBlockLibrary(std::optional<std::filesystem::path> dir = std::nullopt);

  /// Process-wide instance reading $HYPERKNIGHT_BLOCK_DIR (default ./blocks)
  /// when that directory exists.
  static BaseBlockLibrary& shared();

  /// Loads a stored copy when present and valid, otherwise derives it.
  /// Thread-safe.
  const Tour& get(const std::string& name);

  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  /// Re-derives blocks (all, or only `only`) into `dir` and rewrites the
  /// manifest. Returns the names written.
  static std::vector<std::string> regenerate(const std::filesystem::path& dir,
                                             const std::optional<std::string>& only = {});

 private:
  std::optional<Tour> load(const BlockRecipe& r) const;

  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<std::string, Tour> cache_;
};

}  // namespace hk
