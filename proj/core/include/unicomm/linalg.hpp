#pragma once

#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// Largest singular value. Zero for the zero matrix.
/// Throws DimensionMismatch for non-square input.
double op_norm(const CMatrix& a);

/// Determinant through a partially pivoted LU factorization.
Complex determinant(const CMatrix& a);

/// Product of the Euclidean row norms (Hadamard's bound on |det a|).
double hadamard_scale(const CMatrix& a);

/// Eigenpairs of a normal matrix: a = vectors * diag(values) * vectors*,
/// with `vectors` unitary. Computed from a complex Schur form, whose
/// triangular factor is diagonal for normal input.
struct NormalEigen {
  CVector values;
  CMatrix vectors;
};
NormalEigen normal_eigen(const CMatrix& a);

/// d(x) = |1 - e^{ix}| = 2 sin(x/2) on [0, pi].
double d_func(double x);
/// Inverse of d_func: 2 asin(y/2) on [0, 2].
double d_inv(double y);

/// Maps an argument to (-pi, pi]; values within `angle_tol` of -pi or pi
/// become exactly pi.
double wrap_angle(double a, double angle_tol);

/// Eigenangles of w in (-pi, pi], ascending.
std::vector<double> unitary_angles(const UnitaryMatrix& w, const Tolerances& tol = {});

/// Principal logarithm. Throws SpectrumContainsMinusOne when an eigenangle is
/// within tol.angle of +-pi.
SkewHermitianMatrix principal_log(const UnitaryMatrix& u, const Tolerances& tol = {});

/// Some skew-Hermitian h with e^h = u. Eigenangles near -1 are assigned pi, so
/// this never fails.
SkewHermitianMatrix skew_log(const UnitaryMatrix& u, const Tolerances& tol = {});

UnitaryMatrix exp_skew(const SkewHermitianMatrix& h);

/// The one-parameter group t -> e^{t h}, diagonalized once so repeated
/// evaluation costs two matrix products.
class SkewFlow {
 public:
  explicit SkewFlow(const SkewHermitianMatrix& h);

  UnitaryMatrix at(double t) const;
  /// ||h||_op.
  double norm() const { return norm_; }
  Index dim() const { return vectors_.rows(); }

 private:
  CMatrix vectors_;
  RVector frequencies_;  // h = i * vectors * diag(frequencies) * vectors*
  double norm_ = 0.0;
};

/// Multiplicative commutator u v u^{-1} v^{-1}.
UnitaryMatrix gamma(const UnitaryPair& p);

/// ||uv - vu||_op.
double commutator_norm(const UnitaryPair& p);

}  // namespace unicomm
