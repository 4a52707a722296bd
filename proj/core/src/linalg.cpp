#include "unicomm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "unicomm/error.hpp"

namespace unicomm {

double op_norm(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    fail(ErrorCode::DimensionMismatch, "op_norm needs a square matrix, got " +
                                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

Complex determinant(const CMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "determinant needs a square matrix");
  return Eigen::PartialPivLU<CMatrix>(a).determinant();
}

double hadamard_scale(const CMatrix& a) {
  double s = 1.0;
  for (Index i = 0; i < a.rows(); ++i) s *= a.row(i).norm();
  return s;
}

NormalEigen normal_eigen(const CMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "normal_eigen needs a square matrix");
  Eigen::ComplexSchur<CMatrix> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) fail(ErrorCode::PostconditionFailed, "complex Schur did not converge");
  return NormalEigen{schur.matrixT().diagonal(), schur.matrixU()};
}

double d_func(double x) {
  if (!(x >= 0.0 && x <= kPi)) fail(ErrorCode::DomainError, "d_func needs x in [0, pi], got " + std::to_string(x));
  return 2.0 * std::sin(0.5 * x);
}

double d_inv(double y) {
  if (!(y >= 0.0 && y <= 2.0)) fail(ErrorCode::DomainError, "d_inv needs y in [0, 2], got " + std::to_string(y));
  return 2.0 * std::asin(0.5 * y);
}

double wrap_angle(double a, double angle_tol) {
  a = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (a >= kPi - angle_tol || a <= -kPi + angle_tol) return kPi;
  return a;
}

std::vector<double> unitary_angles(const UnitaryMatrix& w, const Tolerances& tol) {
  const NormalEigen eig = normal_eigen(w.matrix());
  std::vector<double> angles(static_cast<std::size_t>(eig.values.size()));
  for (Index i = 0; i < eig.values.size(); ++i) {
    angles[static_cast<std::size_t>(i)] = wrap_angle(std::arg(eig.values(i)), tol.angle);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

namespace {

SkewHermitianMatrix skew_from_angles(const CMatrix& vectors, const RVector& angles) {
  const CVector diag = angles.cast<Complex>() * Complex(0.0, 1.0);
  CMatrix h = vectors * diag.asDiagonal() * vectors.adjoint();
  h = 0.5 * (h - h.adjoint()).eval();
  return SkewHermitianMatrix::assume_skew(std::move(h));
}

}  // namespace

SkewHermitianMatrix principal_log(const UnitaryMatrix& u, const Tolerances& tol) {
  const NormalEigen eig = normal_eigen(u.matrix());
  RVector angles(eig.values.size());
  for (Index i = 0; i < angles.size(); ++i) {
    const double a = std::arg(eig.values(i));
    if (std::abs(a) > kPi - tol.angle) {
      fail(ErrorCode::SpectrumContainsMinusOne,
           "eigenangle " + std::to_string(a) + " lies within angle_tol of the branch cut");
    }
    angles(i) = a;
  }
  return skew_from_angles(eig.vectors, angles);
}

SkewHermitianMatrix skew_log(const UnitaryMatrix& u, const Tolerances& tol) {
  const NormalEigen eig = normal_eigen(u.matrix());
  RVector angles(eig.values.size());
  for (Index i = 0; i < angles.size(); ++i) angles(i) = wrap_angle(std::arg(eig.values(i)), tol.angle);
  return skew_from_angles(eig.vectors, angles);
}

SkewFlow::SkewFlow(const SkewHermitianMatrix& h) {
  // -i h is Hermitian; symmetrize to absorb the skew tolerance.
  CMatrix herm = Complex(0.0, -1.0) * h.matrix();
  herm = 0.5 * (herm + herm.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  if (solver.info() != Eigen::Success) fail(ErrorCode::PostconditionFailed, "Hermitian eigensolver failed");
  vectors_ = solver.eigenvectors();
  frequencies_ = solver.eigenvalues();
  norm_ = frequencies_.size() == 0 ? 0.0 : frequencies_.cwiseAbs().maxCoeff();
}

UnitaryMatrix SkewFlow::at(double t) const {
  CVector phases(frequencies_.size());
  for (Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, t * frequencies_(i));
  return UnitaryMatrix::assume_unitary(vectors_ * phases.asDiagonal() * vectors_.adjoint());
}

UnitaryMatrix exp_skew(const SkewHermitianMatrix& h) { return SkewFlow(h).at(1.0); }

UnitaryMatrix gamma(const UnitaryPair& p) {
  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  return UnitaryMatrix::assume_unitary(u * v * u.adjoint() * v.adjoint());
}

double commutator_norm(const UnitaryPair& p) {
  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  return op_norm(u * v - v * u);
}

}  // namespace unicomm
