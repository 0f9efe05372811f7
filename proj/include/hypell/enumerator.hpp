#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypell/types.hpp"

namespace hypell {

enum class Mode { max, all };

struct CellQuery {
  long long g = 5;
  long long delta = -7;  // K^2 - 3 chi
  Mode mode = Mode::max;
  long long t_max = 11;
  long long n4_max = 11;
  long long k_max = 28;

  long long k() const { return 2 * g + 2; }
};

enum class Condition {
  c0,  // k = 0 mod 4  =>  l even
  c1,  // l >= k/2
  c2,  // l = k/2  <=>  (t = 2 and N4 = N6 = N8 = 0)
  c3,  // l = k/2+2  =>  (N6 = N8 = 0, t >= N4, (t = N4 or N4 > 1))
  c4,  // l = k-2 and t = 0  =>  k/2 even
  c5,  // l < k-2  =>  l - k/2 even
  c6,  // t = 1 and N4 = N6 = N8 = 0  =>  l = k-2
  cap_r4,  // N4 > 0  =>  l >= k/2+2
  cap_r6,  // N6 > 0  =>  l >= k/2+4
  cap_r8,  // N8 > 0  =>  l >= k/2+6
};

std::string to_string(Condition c);

// Every condition the tuple violates; empty means the tuple passes.
// Requires k even >= 12 and non-negative t, N4, N6, N8.
std::vector<Condition> conditions_check(long long k, long long l, long long t,
                                        long long n4, long long n6, long long n8);

struct Candidate {
  long long k = 0, l = 0, t = 0;
  long long n4 = 0, n6 = 0, n8 = 0;
  long long chi = 0, k2_min = 0, k2_canres = 0;
  std::vector<long long> feasible_e;
};

struct CellResult {
  CellQuery query;
  std::optional<long long> max_chi;  // nullopt = EMPTY (non-existence)
  std::vector<Candidate> witnesses;
};

// Exhaustive search of one (g, delta) cell over (l, t, N4, N6, N8).
// Emptiness is always certified against the full space; mode only selects
// which witnesses are reported. Witness order: descending chi, then
// ascending l, t, N4, N6, N8. Requires g >= 5 and -18 <= delta <= -7.
CellResult enumerate_cell(const CellQuery& query);

struct ChiTable {
  long long g_lo = 0, g_hi = 0;
  long long delta_lo = 0, delta_hi = 0;  // delta_lo <= delta_hi
  // rows indexed by g - g_lo; columns by delta descending from delta_hi.
  std::vector<std::vector<std::optional<long long>>> cells;

  const std::optional<long long>& at(long long g, long long delta) const {
    return cells.at(g - g_lo).at(delta_hi - delta);
  }
};

ChiTable max_chi_table(long long g_lo, long long g_hi, long long delta_lo,
                       long long delta_hi, long long t_max = 11, long long n4_max = 11);

// Hirzebruch indices e in {0,1,2} carrying the class k C0 + (e k/2 + l) F:
// the class must be 2-divisible and the section intersection l - e k/2 >= -e.
std::vector<long long> feasible_models(long long k, long long l);

}  // namespace hypell
