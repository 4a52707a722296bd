#include "unicomm/descent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/variational.hpp"

namespace unicomm {

namespace {

constexpr double kExtremalBand = 1e-9;

double max_abs(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> shrink_extremal_angles(const std::vector<double>& angles, double shrink) {
  if (!(shrink > 0.0 && shrink < 1.0)) fail(ErrorCode::InvalidArgument, "shrink must lie in (0, 1)");
  std::vector<double> out = angles;
  const double top = max_abs(angles);
  if (top == 0.0) return out;

  std::vector<std::size_t> extremal, rest;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    (std::abs(angles[i]) >= top - kExtremalBand ? extremal : rest).push_back(i);
  }

  if (!rest.empty()) {
    double removed = 0.0;
    for (std::size_t i : extremal) {
      removed += shrink * angles[i];
      out[i] = angles[i] * (1.0 - shrink);
    }
    const double share = removed / static_cast<double>(rest.size());
    for (std::size_t i : rest) out[i] += share;
    return out;
  }

  // Every angle sits at +-top. Keep the sum fixed by moving p positives down
  // by s_pos and q negatives up by s_neg with p s_pos = q s_neg.
  std::size_t pos = 0, neg = 0;
  for (double a : angles) (a > 0.0 ? pos : neg) += 1;
  if (pos == 0 || neg == 0) return out;  // scalar: nothing to trade against
  const double big = shrink * top;
  const double s_pos = pos >= neg ? big * static_cast<double>(neg) / static_cast<double>(pos) : big;
  const double s_neg = pos >= neg ? big : big * static_cast<double>(pos) / static_cast<double>(neg);
  for (std::size_t i = 0; i < angles.size(); ++i) out[i] = angles[i] > 0.0 ? angles[i] - s_pos : angles[i] + s_neg;
  return out;
}

DescentResult descent_step(const UnitaryPair& p, const DescentOptions& opts, const Tolerances& tol) {
  if (opts.max_backtracks < 0) fail(ErrorCode::InvalidArgument, "max_backtracks must be >= 0");
  const double before = commutator_norm(p);
  if (!(before > 0.0)) fail(ErrorCode::PreconditionViolated, "pair commutes; nothing to decrease");
  if (scalar_commutator(p)) {
    fail(ErrorCode::PreconditionViolated, "multiplicative commutator is a scalar (local minimum case)");
  }
  if (!regularity_report(p).irreducible) fail(ErrorCode::PreconditionViolated, "pair is reducible");

  const Index n = p.dim();
  const NormalEigen eig = normal_eigen(gamma(p).matrix());
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) angles[static_cast<std::size_t>(i)] = wrap_angle(std::arg(eig.values(i)), tol.angle);
  const double top = max_abs(angles);

  double shrink = opts.shrink;
  std::vector<double> target;
  for (int i = 0;; ++i) {
    target = shrink_extremal_angles(angles, shrink);
    if (max_abs(target) < top) break;
    if (i == 60) fail(ErrorCode::NoDecrease, "could not build a target closer to the identity");
    shrink *= 0.5;
  }

  // X = log(gamma^{-1} w*) shares gamma's eigenvectors.
  CVector delta(n);
  for (Index i = 0; i < n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    delta(i) = Complex(0.0, target[ii] - angles[ii]);
  }
  const CMatrix x = eig.vectors * delta.asDiagonal() * eig.vectors.adjoint();

  // gamma(u e^{sh}, v e^{sk}) = gamma (I + s (vu) L(h,k) (vu)^{-1}) + O(s^2).
  const CMatrix vu = p.v().matrix() * p.u().matrix();
  const CMatrix rhs = vu.adjoint() * x * vu;
  const std::vector<CMatrix> target_basis = traceless_skew_basis(n);
  const std::vector<CMatrix> domain_basis = skew_basis(n);
  const RMatrix op = dgamma_operator(p);
  const RVector coeffs = op.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(coordinates(rhs, target_basis));

  const auto nd = static_cast<Index>(domain_basis.size());
  const SkewFlow flow_h(SkewHermitianMatrix::assume_skew(from_coordinates(coeffs.head(nd), domain_basis)));
  const SkewFlow flow_k(SkewHermitianMatrix::assume_skew(from_coordinates(coeffs.tail(nd), domain_basis)));

  double step = 1.0;
  for (int b = 0; b <= opts.max_backtracks; ++b) {
    UnitaryPair candidate(p.u() * flow_h.at(step), p.v() * flow_k.at(step));
    const double after = commutator_norm(candidate);
    if (after < before) {
      double target_norm = 0.0;
      for (double a : target) target_norm = std::max(target_norm, 2.0 * std::sin(0.5 * std::abs(a)));
      return DescentResult{std::move(candidate), before, after, step, b, shrink, target_norm};
    }
    step *= 0.5;
  }
  fail(ErrorCode::NoDecrease, "no decrease after " + std::to_string(opts.max_backtracks) + " halvings");
}

}  // namespace unicomm
