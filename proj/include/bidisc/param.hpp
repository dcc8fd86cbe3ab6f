#ifndef BIDISC_PARAM_HPP
#define BIDISC_PARAM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bidisc/minimality.hpp"

namespace bidisc {

// Rational parametrisation x = u(s), y = v1(s)/v2(s).
struct RatParam {
  UPoly u, v1, v2;
  RatParam(UPoly u_, UPoly v1_, UPoly v2_);
};

// Primitive part of Res_s(u(s) - x, v2(s)*y - v1(s)).
BPoly implicitize(const RatParam& p);

struct ParamReport {
  BPoly f;
  bool proper = false;
  int pred_dy = 0, pred_a = 0, pred_b = 0;
  int obs_dy = 0, obs_a = 0, obs_b = 0;
  Degree deg_disc;
  bool minimal = false;
};

ParamReport param_report(const RatParam& p);

struct SearchShape {
  int deg_u, deg_v1, deg_v2;
};

struct SearchHit {
  RatParam param;
  BPoly f;
  int d_y, d_x, c;
  int deg_disc;
  bool reduced;
  std::uint64_t index;  // position in the enumeration (for --resume)
};

// Deterministic seed-permuted enumeration of exact-degree integer coefficient
// vectors by increasing L1 height (v2 monic); hits are parametrisations whose
// implicit polynomial is minimal, reduced and nonmonic (c > 0).
// Returns up to `budget` examined candidates' hits; deterministic in
// (seed, offset) regardless of thread count.
std::vector<SearchHit> search_minimal(const SearchShape& shape, std::uint64_t seed,
                                      std::uint64_t budget, std::uint64_t offset = 0,
                                      int threads = 1,
                                      const std::function<void(const SearchHit&)>& sink = {});

}  // namespace bidisc

#endif
