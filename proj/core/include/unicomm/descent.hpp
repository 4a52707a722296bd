#pragma once

#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

struct DescentOptions {
  /// Fraction by which the extremal eigenangles of gamma are pulled toward 0.
  double shrink = 0.1;
  /// Step s runs over 1, 1/2, 1/4, ... for at most this many halvings.
  int max_backtracks = 40;
};

struct DescentResult {
  UnitaryPair pair;
  double before = 0.0;
  double after = 0.0;
  double step = 0.0;       // accepted s
  int backtracks = 0;      // halvings before acceptance
  double shrink_used = 0.0;
  double target_norm = 0.0;  // ||w* - I|| for the target w*
};

/// Target eigenangles: every extremal angle (|a| within 1e-9 of the max) is
/// scaled by (1 - shrink) and the removed amount is spread evenly over the
/// remaining angles, so the sum (and det = 1) is unchanged. When every angle
/// is extremal the positive and negative groups are shrunk in balance.
std::vector<double> shrink_extremal_angles(const std::vector<double>& angles, double shrink);

/// One constructive descent move for an irreducible pair whose
/// multiplicative commutator is not a scalar. Solves the linearized
/// equation for (h, k) that moves gamma toward a target strictly closer to
/// the identity, then backtracks along (u e^{s h}, v e^{s k}).
///
/// Throws PreconditionViolated (reducible, scalar gamma, or commuting pair)
/// and NoDecrease after max_backtracks halvings.
DescentResult descent_step(const UnitaryPair& p, const DescentOptions& opts = {}, const Tolerances& tol = {});

}  // namespace unicomm
