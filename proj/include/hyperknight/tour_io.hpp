#pragma once

// JSON tour documents and the plain-text visit-number grid.
//
//   {"schema_version": 1, "dims": [6, 6], "alpha": 2, "beta": 1,
//    "closed": true, "cycle": [[1, 1], [2, 3], ...], "metadata": {...}}

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperknight/tour.hpp"

namespace hk {

inline constexpr int kSchemaVersion = 1;

struct TourDocument {
  Tour tour;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Throws Error(Verification) when `require_valid` and the tour fails verify.
std::string export_json(const Tour& t,
                        const nlohmann::json& metadata = nlohmann::json::object(),
                        bool require_valid = true);

/// Throws Error(Schema) for malformed documents and Error(Verification)
/// when `require_valid` and the loaded tour fails verify.
TourDocument import_json(std::string_view text, bool require_valid = true);

/// Visit numbers (1-based) per cell. 2D: one line per row. 3D: one block
/// per position on the last axis. Throws UnsupportedInput for other ranks.
std::string export_grid(const Tour& t);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary file and a rename.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hk
