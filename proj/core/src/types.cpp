#include "unicomm/types.hpp"

#include <cmath>
#include <string>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"

namespace unicomm {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + " must be square with dim >= 1, got " + std::to_string(m.rows()) +
             "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) fail(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

// The Frobenius norm dominates the operator norm, so it settles the common
// case without an SVD.
bool within_op_norm(const CMatrix& defect, double tol) {
  if (defect.norm() <= tol) return true;
  return op_norm(defect) <= tol;
}

}  // namespace

void Tolerances::validate() const {
  for (double t : {unitarity, zero, angle}) {
    if (!(t > 0.0 && t < 1.0)) {
      fail(ErrorCode::InvalidArgument, "tolerances must lie in (0, 1), got " + std::to_string(t));
    }
  }
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries, double unitarity_tol) : m_(std::move(entries)) {
  require_square(m_, "unitary matrix");
  const CMatrix defect = m_.adjoint() * m_ - CMatrix::Identity(m_.rows(), m_.cols());
  if (!within_op_norm(defect, unitarity_tol)) {
    fail(ErrorCode::NotUnitary,
         "||U*U - I|| = " + std::to_string(op_norm(defect)) + " exceeds " + std::to_string(unitarity_tol));
  }
}

UnitaryMatrix UnitaryMatrix::assume_unitary(CMatrix entries) {
  return UnitaryMatrix(std::move(entries), Trusted{});
}

UnitaryMatrix UnitaryMatrix::identity(Index dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "dim must be >= 1");
  return UnitaryMatrix(CMatrix::Identity(dim, dim), Trusted{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint(), Trusted{}); }

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (dim() != rhs.dim()) fail(ErrorCode::DimensionMismatch, "unitary product of different dims");
  return UnitaryMatrix(m_ * rhs.m_, Trusted{});
}

double UnitaryMatrix::unitarity_defect() const {
  return op_norm(m_.adjoint() * m_ - CMatrix::Identity(dim(), dim()));
}

SkewHermitianMatrix::SkewHermitianMatrix(CMatrix entries, double tol) : m_(std::move(entries)) {
  require_square(m_, "skew-Hermitian matrix");
  const CMatrix defect = m_ + m_.adjoint();
  if (!within_op_norm(defect, tol)) {
    fail(ErrorCode::NotSkewHermitian, "||H + H*|| = " + std::to_string(op_norm(defect)) +
                                          " exceeds " + std::to_string(tol));
  }
}

SkewHermitianMatrix SkewHermitianMatrix::assume_skew(CMatrix entries) {
  return SkewHermitianMatrix(std::move(entries), Trusted{});
}

SkewHermitianMatrix SkewHermitianMatrix::zero(Index dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "dim must be >= 1");
  return SkewHermitianMatrix(CMatrix::Zero(dim, dim), Trusted{});
}

SkewHermitianMatrix SkewHermitianMatrix::operator*(double s) const {
  return SkewHermitianMatrix(m_ * s, Trusted{});
}

SkewHermitianMatrix SkewHermitianMatrix::operator+(const SkewHermitianMatrix& rhs) const {
  if (dim() != rhs.dim()) fail(ErrorCode::DimensionMismatch, "skew sum of different dims");
  return SkewHermitianMatrix(m_ + rhs.m_, Trusted{});
}

UnitaryPair::UnitaryPair(UnitaryMatrix u, UnitaryMatrix v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.dim() != v_.dim()) {
    fail(ErrorCode::DimensionMismatch, "pair dims differ: " + std::to_string(u_.dim()) + " vs " +
                                           std::to_string(v_.dim()));
  }
}

UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const Index n = a.dim() + b.dim();
  CMatrix m = CMatrix::Zero(n, n);
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return UnitaryMatrix::assume_unitary(std::move(m));
}

UnitaryPair direct_sum(const UnitaryPair& a, const UnitaryPair& b) {
  return UnitaryPair(direct_sum(a.u(), b.u()), direct_sum(a.v(), b.v()));
}

UnitaryPair conjugate(const UnitaryPair& p, const UnitaryMatrix& w) {
  const UnitaryMatrix wa = w.adjoint();
  return UnitaryPair(w * p.u() * wa, w * p.v() * wa);
}

}  // namespace unicomm
