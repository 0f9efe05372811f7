#include "hypell/enumerator.hpp"

#include <algorithm>
#include <tuple>

#include "hypell/invariants.hpp"

namespace hypell {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::c0: return "0";
    case Condition::c1: return "1";
    case Condition::c2: return "2";
    case Condition::c3: return "3";
    case Condition::c4: return "4";
    case Condition::c5: return "5";
    case Condition::c6: return "6";
    case Condition::cap_r4: return "cap_r4";
    case Condition::cap_r6: return "cap_r6";
    case Condition::cap_r8: return "cap_r8";
  }
  return "?";
}

std::vector<Condition> conditions_check(long long k, long long l, long long t,
                                        long long n4, long long n6, long long n8) {
  if (k < 12 || k % 2 != 0)
    throw PreconditionViolated("conditions_check requires even k >= 12");
  if (t < 0 || n4 < 0 || n6 < 0 || n8 < 0)
    throw PreconditionViolated("conditions_check requires non-negative t, N4, N6, N8");

  std::vector<Condition> v;
  const long long h = k / 2;
  const bool no_sing = n4 == 0 && n6 == 0 && n8 == 0;

  if (k % 4 == 0 && l % 2 != 0) v.push_back(Condition::c0);
  if (l < h) v.push_back(Condition::c1);
  // (2) is a biconditional; its converse is load-bearing.
  if ((l == h) != (t == 2 && no_sing)) v.push_back(Condition::c2);
  if (l == h + 2 &&
      !(n6 == 0 && n8 == 0 && t >= n4 && (t == n4 || n4 > 1)))
    v.push_back(Condition::c3);
  if (l == k - 2 && t == 0 && h % 2 != 0) v.push_back(Condition::c4);
  if (l < k - 2 && (l - h) % 2 != 0) v.push_back(Condition::c5);
  if (t == 1 && no_sing && l != k - 2) v.push_back(Condition::c6);
  if (n4 > 0 && l < h + 2) v.push_back(Condition::cap_r4);
  if (n6 > 0 && l < h + 4) v.push_back(Condition::cap_r6);
  if (n8 > 0 && l < h + 6) v.push_back(Condition::cap_r8);
  return v;
}

std::vector<long long> feasible_models(long long k, long long l) {
  if (k % 2 != 0) throw ParityMismatch("feasible_models requires even k");
  std::vector<long long> out;
  for (long long e = 0; e <= 2; ++e) {
    if ((e * k / 2 + l) % 2 != 0) continue;
    if (l - e * k / 2 < -e) continue;
    out.push_back(e);
  }
  return out;
}

CellResult enumerate_cell(const CellQuery& q) {
  if (q.g < 5 || q.delta < -18 || q.delta > -7)
    throw OutOfRegime("enumerate_cell requires g >= 5 and -18 <= delta <= -7");

  CellResult res;
  res.query = q;
  const long long k = q.k();
  if (k > q.k_max) return res;

  // (k-10)(l-10) <= 4(15+delta) keeps N4+N6 >= 0 at t = 0.
  const long long span = 4 * (15 + q.delta);
  const long long l_hi =
      10 + (span >= 0 ? span / (k - 10) : -((-span + k - 11) / (k - 10)));

  for (long long l = k / 2; l <= l_hi; ++l) {
    if (((k - 2) * (l - 2)) % 4 != 0) continue;  // chi cannot be integral
    const long long chi_base = 1 + (k - 2) * (l - 2) / 4;
    for (long long t = 0; t <= q.t_max; ++t) {
      const long long budget4 = 4 * (15 + q.delta - t) - (k - 10) * (l - 10);
      if (budget4 < 0) break;  // decreasing in t
      if (budget4 % 4 != 0) continue;
      const long long m = budget4 / 4;  // N4 + N6
      for (long long n8 = 0; chi_base - m - 6 * n8 >= 1; ++n8) {
        for (long long n6 = 0; n6 <= m; ++n6) {
          const long long n4 = m - n6;
          if (n4 > q.n4_max) continue;
          const long long chi = chi_base - m - 2 * n6 - 6 * n8;
          if (chi < 1) break;  // chi decreases in n6
          const long long k2_min = 3 * chi + q.delta;
          if (k2_min < 1) continue;
          if (!conditions_check(k, l, t, n4, n6, n8).empty()) continue;
          Candidate c;
          c.k = k;
          c.l = l;
          c.t = t;
          c.n4 = n4;
          c.n6 = n6;
          c.n8 = n8;
          c.chi = chi;
          c.k2_min = k2_min;
          c.k2_canres = k2_min - t;
          c.feasible_e = feasible_models(k, l);
          res.witnesses.push_back(std::move(c));
        }
      }
    }
  }

  std::sort(res.witnesses.begin(), res.witnesses.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::make_tuple(-a.chi, a.l, a.t, a.n4, a.n6, a.n8) <
                     std::make_tuple(-b.chi, b.l, b.t, b.n4, b.n6, b.n8);
            });
  if (!res.witnesses.empty()) {
    res.max_chi = res.witnesses.front().chi;
    if (q.mode == Mode::max) {
      std::erase_if(res.witnesses,
                    [&](const Candidate& c) { return c.chi != *res.max_chi; });
    }
  }
  return res;
}

ChiTable max_chi_table(long long g_lo, long long g_hi, long long delta_lo,
                       long long delta_hi, long long t_max, long long n4_max) {
  if (g_lo > g_hi || delta_lo > delta_hi)
    throw PreconditionViolated("max_chi_table: bad ranges");
  ChiTable table;
  table.g_lo = g_lo;
  table.g_hi = g_hi;
  table.delta_lo = delta_lo;
  table.delta_hi = delta_hi;
  for (long long g = g_lo; g <= g_hi; ++g) {
    std::vector<std::optional<long long>> row;
    for (long long d = delta_hi; d >= delta_lo; --d) {
      CellQuery q;
      q.g = g;
      q.delta = d;
      q.mode = Mode::max;
      q.t_max = t_max;
      q.n4_max = n4_max;
      row.push_back(enumerate_cell(q).max_chi);
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

}  // namespace hypell
