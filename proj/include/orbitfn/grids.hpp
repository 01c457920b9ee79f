#pragma once

#include <optional>
#include <vector>

#include "orbitfn/weylgroup.hpp"

namespace orbitfn {

/// A grid point: nonnegative integers u_0..u_n with sum u_i q_i = M and
/// u_i > 0 on the generators flipped by sigma; coords are the omega-check
/// coordinates of sum_i u_i omega_i / M.
struct GridPoint {
  IntVec u;
  RatVec coords;
  Int eps;
};

/// A weight label: integer omega-coordinates u_1..u_n under the same
/// constraint system, annotated with the stabilizer order of lambda / M.
struct WeightLabel {
  IntVec lambda;
  long long u0 = 0;
  Int h;
};

struct CountReport {
  Int enumerated;
  std::optional<Int> closed_form;
  Int dp;

  bool consistent() const {
    return enumerated == dp && (!closed_form || *closed_form == dp);
  }
};

/// Lexicographically ordered by (u_1,...,u_n); requires M >= 1.
std::vector<GridPoint> enumerate_grid(const RootSystemData& rs, SignHom sigma,
                                      long long M,
                                      std::uint64_t ceiling = kDefaultGroupCeiling);

std::vector<WeightLabel> enumerate_labels(const RootSystemData& rs,
                                          SignHom sigma, long long M,
                                          std::uint64_t ceiling = kDefaultGroupCeiling);

/// Closed-form point count for the B, C, G, F series (absent for A, D, E,
/// which are covered by the dynamic-programming count instead).
std::optional<Int> count_closed_form(const RootSystemData& rs, SignHom sigma,
                                     long long M);

/// Independent count of the solutions of sum u_i q_i = M with the sigma
/// positivity pattern, by dynamic programming over the comark multiset.
Int count_dp(const RootSystemData& rs, SignHom sigma, long long M);

CountReport count_report(const RootSystemData& rs, SignHom sigma, long long M);

/// omega-check coordinates of sum u_i omega_i / M from u = (u_0..u_n).
RatVec grid_coords(const RootSystemData& rs, const IntVec& u, long long M);

}  // namespace orbitfn
