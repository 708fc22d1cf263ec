#include "hyperknight/tour_io.hpp"

#include <fstream>
#include <sstream>

#include "hyperknight/error.hpp"

namespace hk {

using nlohmann::json;

std::string export_json(const Tour& t, const json& metadata, bool require_valid) {
  if (require_valid) {
    if (auto v = verify(t)) {
      throw Error(ErrorCode::Verification, "refusing to export: " + v->detail);
    }
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dims"] = std::vector<int>(t.board().dims().begin(), t.board().dims().end());
  doc["alpha"] = t.moves().alpha();
  doc["beta"] = t.moves().beta();
  doc["closed"] = t.closed();
  json cycle = json::array();
  std::vector<int> c(t.board().rank());
  for (CellId id : t.order()) {
    t.board().decode(id, c);
    cycle.push_back(c);
  }
  doc["cycle"] = std::move(cycle);
  doc["metadata"] = metadata.is_null() ? json::object() : metadata;
  return doc.dump() + "\n";
}

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::Schema, "tour document: " + what);
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

TourDocument import_json(std::string_view text, bool require_valid) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    schema(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) schema("top level is not an object");
  try {
    if (field(doc, "schema_version").get<int>() != kSchemaVersion) {
      schema("unsupported schema_version");
    }
    const auto dims = field(doc, "dims").get<std::vector<int>>();
    const int alpha = field(doc, "alpha").get<int>();
    const int beta = field(doc, "beta").get<int>();
    const bool closed = field(doc, "closed").get<bool>();
    const auto cells = field(doc, "cycle").get<std::vector<Cell>>();
    BoardSpec board(dims);
    MoveParams mp(alpha, beta);
    if (require_valid) {
      if (auto v = verify_cells(board, mp, cells, closed)) {
        throw Error(ErrorCode::Verification, "invalid tour: " + v->detail);
      }
      if (!closed && cells.size() != board.cell_count()) {
        throw Error(ErrorCode::Verification, "open tour does not cover the board");
      }
    }
    for (const Cell& c : cells) {
      if (c.size() != board.rank() || !board.contains(c)) schema("cell off board");
    }
    json metadata = doc.contains("metadata") ? doc["metadata"] : json::object();
    return {Tour::from_cells(std::move(board), mp, cells, closed), std::move(metadata)};
  } catch (const json::exception& e) {
    schema(std::string("wrong field type (") + e.what() + ")");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidBoard || e.code() == ErrorCode::InvalidMoves) {
      schema(e.what());
    }
    throw;
  }
}

std::string export_grid(const Tour& t) {
  const BoardSpec& b = t.board();
  if (b.rank() != 2 && b.rank() != 3) {
    throw Error(ErrorCode::UnsupportedInput,
                "grid output supports 2D and 3D boards only; use JSON");
  }
  const std::vector<CellId> pos = t.positions();
  const int width = static_cast<int>(std::to_string(b.cell_count()).size());
  const int layers = b.rank() == 3 ? b.dim(2) : 1;
  std::ostringstream out;
  std::vector<int> c(b.rank());
  for (int z = 1; z <= layers; ++z) {
    if (b.rank() == 3) {
      if (z > 1) out << "\n";
      out << "layer " << z << "\n";
    }
    for (int r = 1; r <= b.dim(0); ++r) {
      for (int col = 1; col <= b.dim(1); ++col) {
        c[0] = r;
        c[1] = col;
        if (b.rank() == 3) c[2] = z;
        const CellId p = pos[b.index_of(c)];
        std::string cell = p == kNoCell ? "." : std::to_string(p + 1);
        if (col > 1) out << ' ';
        out << std::string(width - static_cast<int>(cell.size()), ' ') << cell;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename to " + path.string());
}

}  // namespace hk
