#include "biquandle/knot_table.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace biq {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<KnotRecord> parse_knot_table(std::string_view text) {
  std::vector<KnotRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = line.find('|', start);
      fields.push_back(trim(std::string_view(line).substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
      throw Error(ErrorKind::parse, "knot table line " + std::to_string(line_no) + ": expected 'name | diagram | determinant?'");
    KnotRecord rec;
    rec.name = fields[0];
    try {
      const auto& code = fields[1];
      rec.diagram = code.find_first_of("([") != std::string::npos ? parse_planar_code(code) : parse_pd(code);
    } catch (const Error& e) {
      throw Error(e.kind(), "knot table line " + std::to_string(line_no) + " (" + rec.name + "): " + e.what());
    }
    if (fields.size() == 3 && !fields[2].empty()) {
      try {
        rec.determinant = std::stoll(fields[2]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "knot table line " + std::to_string(line_no) + ": bad determinant '" + fields[2] + "'");
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_parameter, "cannot open knot table " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_knot_table(buf.str());
}

std::string default_knot_table_path() {
  if (const char* env = std::getenv("BIQ_KNOT_TABLE"); env && *env) return env;
  return BIQ_DEFAULT_KNOT_TABLE;
}

const std::vector<KnotRecord>& builtin_knots() {
  static const std::vector<KnotRecord> table = load_knot_table(default_knot_table_path());
  return table;
}

std::optional<KnotRecord> find_knot(const std::vector<KnotRecord>& table, std::string_view name) {
  for (const auto& k : table)
    if (k.name == name) return k;
  return std::nullopt;
}

const KnotRecord& builtin_knot(std::string_view name) {
  for (const auto& k : builtin_knots())
    if (k.name == name) return k;
  throw Error(ErrorKind::invalid_parameter, "knot '" + std::string(name) + "' is not in the knot table");
}

}  // namespace biq
