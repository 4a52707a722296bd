#pragma once

#include <cstdint>
#include <vector>

#include "unicomm/star_polynomial.hpp"
#include "unicomm/types.hpp"

namespace unicomm {

struct NormFieldOptions {
  Index dim = 2;
  std::vector<double> eps_grid;  // ascending, inside [0, 2]
  int restarts = 4;              // independent warm-started chains
  int iters = 400;               // proposals per grid point per chain
  std::uint64_t seed = 0;
  int threads = 1;
};

/// One curve point. `certificate` is feasible (commutator_norm <= eps, no
/// slack) and ||poly(certificate)|| == estimate.
struct NormFieldPoint {
  double eps = 0.0;
  double estimate = 0.0;
  UnitaryPair certificate;
  double certificate_commutator = 0.0;
  int chain = 0;
};

struct NormFieldCurve {
  StarPolynomial polynomial;
  Index dim = 0;
  std::vector<NormFieldPoint> points;
};

/// Lower bounds for eps -> sup ||poly(u, v)|| over dim x dim pairs with
/// ||uv - vu|| <= eps. Each chain starts from a commuting diagonal pair and
/// walks the grid in ascending order, keeping its best pair as the warm start
/// for the next eps, so every chain's value (and the curve) is nondecreasing.
/// Proposals are random skew steps; an infeasible proposal is pulled back
/// toward the current pair by bisection on the step length. No penalty is
/// ever used, so every estimate is attained by a feasible pair.
NormFieldCurve norm_field_estimate(const StarPolynomial& poly, const NormFieldOptions& opts);

}  // namespace unicomm
