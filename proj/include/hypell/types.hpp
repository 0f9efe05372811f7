#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hypell/errors.hpp"
#include "hypell/rational.hpp"

namespace hypell {

// Multiset of canonical-resolution multiplicities r_i. Every entry is even
// and >= 2; entries equal to 2 are negligible and drop out of every sum.
class SingularitySpectrum {
 public:
  SingularitySpectrum() = default;

  explicit SingularitySpectrum(std::vector<long long> r_list) : r_(std::move(r_list)) {
    for (long long r : r_) {
      if (r < 2 || r % 2 != 0)
        throw ParityMismatch("spectrum entries must be even and >= 2, got " + std::to_string(r));
    }
    std::sort(r_.begin(), r_.end());
  }

  static SingularitySpectrum from_counts(long long n4, long long n6, long long n8) {
    if (n4 < 0 || n6 < 0 || n8 < 0)
      throw PreconditionViolated("negative singularity count");
    std::vector<long long> r;
    r.insert(r.end(), n4, 4);
    r.insert(r.end(), n6, 6);
    r.insert(r.end(), n8, 8);
    return SingularitySpectrum(std::move(r));
  }

  const std::vector<long long>& r_list() const { return r_; }
  bool empty() const { return r_.empty(); }

  long long count(long long r) const {
    return std::count(r_.begin(), r_.end(), r);
  }
  long long n4() const { return count(4); }
  long long n6() const { return count(6); }
  long long n8() const { return count(8); }
  long long r_max() const { return r_.empty() ? 0 : r_.back(); }

  // Sum helpers used by the invariant formulas; all vanish on r_i = 2.
  long long sum_rm2() const {  // sum (r_i - 2)
    long long s = 0;
    for (long long r : r_) s += r - 2;
    return s;
  }
  long long sum_rm2_sq() const {  // sum (r_i - 2)^2
    long long s = 0;
    for (long long r : r_) s += (r - 2) * (r - 2);
    return s;
  }
  long long sum_r_rm2() const {  // sum r_i (r_i - 2)
    long long s = 0;
    for (long long r : r_) s += r * (r - 2);
    return s;
  }
  long long sum_rm2_rm4() const {  // sum (r_i - 2)(r_i - 4)
    long long s = 0;
    for (long long r : r_) s += (r - 2) * (r - 4);
    return s;
  }
  long long sum_rm2_kmrm2(long long k) const {  // sum (r_i - 2)(k - r_i - 2)
    long long s = 0;
    for (long long r : r_) s += (r - 2) * (k - r - 2);
    return s;
  }
  long long sum_rm2_8mr() const {  // sum (r_i - 2)(8 - r_i)
    long long s = 0;
    for (long long r : r_) s += (r - 2) * (8 - r);
    return s;
  }

 private:
  std::vector<long long> r_;
};

// Numerical branch-curve datum for a double cover of a Hirzebruch surface:
// branch class k C0 + (e k/2 + l) F, spectrum of the canonical resolution,
// and the blow-down count t = K^2_S - K^2_S''. e is advisory: no invariant
// depends on it.
struct BranchConfig {
  long long k = 6;
  long long l = 0;
  std::optional<long long> e;
  SingularitySpectrum spectrum;
  long long t = 0;

  void validate() const {
    if (k % 2 != 0) throw ParityMismatch("k must be even, got " + std::to_string(k));
    if (k < 6) throw PreconditionViolated("k must be >= 6, got " + std::to_string(k));
    if (t < 0) throw PreconditionViolated("t must be >= 0, got " + std::to_string(t));
    if (e) {
      long long ev = *e;
      if (ev < 0) throw PreconditionViolated("e must be >= 0");
      if (ev * k / 2 + l < 0)
        throw PreconditionViolated("e*k/2 + l must be >= 0");
      if ((ev * k / 2 + l) % 2 != 0)
        throw ParityMismatch("branch class k C0 + (e k/2 + l) F is not 2-divisible");
    }
  }

  long long genus() const { return (k - 2) / 2; }
};

// Derived invariants of the double cover: canonical resolution, minimal
// model, and the geography coordinate delta = K^2 - 3 chi.
struct SurfaceInvariants {
  long long chi = 0;
  long long k2_canres = 0;
  long long k2_min = 0;
  long long genus = 0;
  long long delta = 0;
};

}  // namespace hypell
