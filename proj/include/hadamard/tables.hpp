#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace hadamard {

enum class TableId { QubParams, QubBounds, WeakParams, WeakIIParams, WeakIIBounds };

// "1", "2", "8", "9" or "weakIIUB"
std::optional<TableId> parse_table_id(std::string_view s);
std::string table_title(TableId id);

// one object per row, n = n_min, n_min + 4, ..., n_max
nlohmann::json table_records(TableId id, int n_min = 4, int n_max = 48);
// aligned text built from the same records
std::string render_table(TableId id, const nlohmann::json& records);

}  // namespace hadamard
