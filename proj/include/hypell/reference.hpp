#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypell/enumerator.hpp"

namespace hypell {

// One cell of the published maximal-chi table together with the construction
// attaining it (surface F0/F1/F2/P2, the class coordinate l or the plane
// degree, and the branch singularity, if any).
struct ReferenceEntry {
  long long g = 0;
  long long delta = 0;
  std::optional<long long> max_chi;  // nullopt = EMPTY
  std::string surface;               // "", "F0", "F1", "F2", "P2"
  std::optional<long long> l_or_degree;
  std::string singularity;  // "", "(3,3)", "(4)"
};

std::vector<ReferenceEntry> load_reference_csv(const std::string& path);

struct CellDiff {
  long long g = 0;
  long long delta = 0;
  std::optional<long long> computed;
  std::optional<long long> reference;
};

// Differences between a computed table and the fixture, restricted to cells
// present in both.
std::vector<CellDiff> compare_to_reference(const ChiTable& table,
                                           const std::vector<ReferenceEntry>& ref,
                                           long long* cells_compared = nullptr);

}  // namespace hypell
