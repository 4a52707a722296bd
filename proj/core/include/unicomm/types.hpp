#pragma once

#include <complex>

#include <Eigen/Dense>

namespace unicomm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;

/// Numerical thresholds shared by every procedure.
///
/// `unitarity` bounds ||U*U - I|| (and ||H + H*|| for skew matrices),
/// `zero` drives determinant and rank zero-tests, `angle` is the margin
/// (radians) kept from the branch cut of the logarithm. All values must lie
/// in (0, 1).
struct Tolerances {
  double unitarity = 1e-10;
  double zero = 1e-9;
  double angle = 1e-6;

  void validate() const;
};

/// Square complex matrix U with ||U*U - I||_op <= unitarity tolerance.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix entries, double unitarity_tol = Tolerances{}.unitarity);

  /// Skips validation. Use only for values that are unitary by construction
  /// (products of unitaries, V diag(e^{ia}) V* with V unitary, ...).
  static UnitaryMatrix assume_unitary(CMatrix entries);
  static UnitaryMatrix identity(Index dim);

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

  /// ||U*U - I||_op.
  double unitarity_defect() const;

 private:
  struct Trusted {};
  UnitaryMatrix(CMatrix entries, Trusted) : m_(std::move(entries)) {}

  CMatrix m_;
};

/// Square complex matrix H with ||H + H*||_op <= unitarity tolerance.
class SkewHermitianMatrix {
 public:
  explicit SkewHermitianMatrix(CMatrix entries, double tol = Tolerances{}.unitarity);

  static SkewHermitianMatrix assume_skew(CMatrix entries);
  static SkewHermitianMatrix zero(Index dim);

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

  SkewHermitianMatrix operator*(double s) const;
  SkewHermitianMatrix operator+(const SkewHermitianMatrix& rhs) const;

 private:
  struct Trusted {};
  SkewHermitianMatrix(CMatrix entries, Trusted) : m_(std::move(entries)) {}

  CMatrix m_;
};

/// Ordered pair (u, v) acting on the same space.
class UnitaryPair {
 public:
  UnitaryPair(UnitaryMatrix u, UnitaryMatrix v);

  const UnitaryMatrix& u() const { return u_; }
  const UnitaryMatrix& v() const { return v_; }
  Index dim() const { return u_.dim(); }

 private:
  UnitaryMatrix u_;
  UnitaryMatrix v_;
};

UnitaryMatrix direct_sum(const UnitaryMatrix& a, const UnitaryMatrix& b);
UnitaryPair direct_sum(const UnitaryPair& a, const UnitaryPair& b);

/// (W u W*, W v W*).
UnitaryPair conjugate(const UnitaryPair& p, const UnitaryMatrix& w);

}  // namespace unicomm
