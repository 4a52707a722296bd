#include "unicomm/antipodal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"

namespace unicomm {

AntipodalReport is_antipodal(const UnitaryMatrix& w1, const UnitaryMatrix& w2, const Tolerances& tol) {
  if (w1.dim() != w2.dim()) fail(ErrorCode::DimensionMismatch, "is_antipodal needs equal dims");
  const CMatrix sum = w1.matrix() + w2.matrix();
  AntipodalReport r;
  r.det_value = determinant(sum);
  r.det_scale = hadamard_scale(sum);
  r.norm_value = op_norm(w1.matrix() - w2.matrix());
  r.verdict = std::abs(r.det_value) <= tol.zero * r.det_scale;
  r.consistent = r.verdict == (r.norm_value > 2.0 - 1e-6);
  return r;
}

MaxCommutatorPath::MaxCommutatorPath(const UnitaryPair& p, const Tolerances& tol) : pair_(p) {
  const NormalEigen eig = normal_eigen(p.u().matrix());
  vectors_ = eig.vectors;
  angles_.resize(eig.values.size());
  for (Index i = 0; i < angles_.size(); ++i) angles_(i) = wrap_angle(std::arg(eig.values(i)), tol.angle);
  flow_norm_ = angles_.size() == 0 ? 0.0 : angles_.cwiseAbs().maxCoeff();
}

UnitaryMatrix MaxCommutatorPath::u_at(double t) const {
  CVector phases(angles_.size());
  for (Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, (1.0 - t) * angles_(i));
  return UnitaryMatrix::assume_unitary(vectors_ * phases.asDiagonal() * vectors_.adjoint());
}

Complex MaxCommutatorPath::f(double t) const {
  const CMatrix ut = u_at(t).matrix();
  const CMatrix& v = pair_.v().matrix();
  return determinant(ut * v + v * ut);
}

PerturbationResult perturb_off_max(const UnitaryPair& p, double delta, int grid, const Tolerances& tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) fail(ErrorCode::InvalidArgument, "delta must be positive and finite");
  if (grid < 1) fail(ErrorCode::InvalidArgument, "grid must be >= 1");
  const double c0 = commutator_norm(p);
  if (std::abs(c0 - 2.0) > 1e-6) {
    fail(ErrorCode::NotAtMaximum, "commutator norm is " + std::to_string(c0) + ", not 2");
  }

  const MaxCommutatorPath path(p, tol);
  const Complex f_one = path.f(1.0);
  const double threshold = tol.zero * std::max(1.0, std::abs(f_one));
  const double t_max = std::min(1.0, delta / (path.h_norm() + 1e-300));
  const double dt = t_max / grid;

  // |d/dt det(A(t))| <= n ||A||^{n-1} ||A'|| with ||A|| <= 2, ||A'|| <= 2 ||h||.
  const auto n = static_cast<double>(p.dim());
  const double lipschitz = n * std::pow(2.0, n) * path.h_norm();

  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  bool continuity_ok = true;
  double prev_abs = std::abs(path.f(0.0));
  for (int j = 1; j <= grid; ++j) {
    const double t = j * dt;
    const UnitaryMatrix ut = path.u_at(t);
    const CMatrix& um = ut.matrix();
    const Complex fv = determinant(um * v + v * um);
    const double fabs = std::abs(fv);
    if (std::abs(fabs - prev_abs) > lipschitz * dt * (1.0 + 1e-9) + 1e-12) continuity_ok = false;
    prev_abs = fabs;
    if (fabs <= threshold) continue;

    const double new_comm = op_norm(um * v - v * um);
    const double disp = op_norm(um - u);
    if (new_comm < 2.0 && disp < delta) {
      return PerturbationResult{ut, t, new_comm, disp, fv, f_one, threshold, j, t_max, continuity_ok};
    }
  }
  fail(ErrorCode::ScanExhausted, "no grid point moved f(t) off zero; refine the grid");
}

}  // namespace unicomm
