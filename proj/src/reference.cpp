#include "hypell/reference.hpp"

#include <fstream>
#include <sstream>

#include "hypell/errors.hpp"

namespace hypell {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  out.push_back(field);
  while (out.size() < 6) out.push_back("");
  return out;
}

}  // namespace

std::vector<ReferenceEntry> load_reference_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference fixture: " + path);
  std::vector<ReferenceEntry> entries;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // column header row
      header_seen = true;
      continue;
    }
    auto f = split_csv_line(line);
    ReferenceEntry e;
    e.g = std::stoll(f[0]);
    e.delta = std::stoll(f[1]);
    if (!f[2].empty()) e.max_chi = std::stoll(f[2]);
    e.surface = f[3];
    if (!f[4].empty()) e.l_or_degree = std::stoll(f[4]);
    e.singularity = f[5];
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CellDiff> compare_to_reference(const ChiTable& table,
                                           const std::vector<ReferenceEntry>& ref,
                                           long long* cells_compared) {
  std::vector<CellDiff> diffs;
  long long compared = 0;
  for (const auto& e : ref) {
    if (e.g < table.g_lo || e.g > table.g_hi) continue;
    if (e.delta < table.delta_lo || e.delta > table.delta_hi) continue;
    ++compared;
    const auto& got = table.at(e.g, e.delta);
    if (got != e.max_chi) diffs.push_back({e.g, e.delta, got, e.max_chi});
  }
  if (cells_compared) *cells_compared = compared;
  return diffs;
}

}  // namespace hypell
