#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biquandle/diagram.hpp"

namespace biq {

/// Lines of the form `name | diagram | determinant`, where the diagram is a
/// planar diagram code (anything containing '(' or '[') or the semiarc wire
/// format with ';' between records. The determinant is optional metadata.
std::vector<KnotRecord> parse_knot_table(std::string_view text);
std::vector<KnotRecord> load_knot_table(const std::string& path);

/// $BIQ_KNOT_TABLE if set, otherwise the table shipped in data/.
std::string default_knot_table_path();
const std::vector<KnotRecord>& builtin_knots();

std::optional<KnotRecord> find_knot(const std::vector<KnotRecord>& table, std::string_view name);
/// Throws Error(invalid_parameter) for unknown names.
const KnotRecord& builtin_knot(std::string_view name);

}  // namespace biq
