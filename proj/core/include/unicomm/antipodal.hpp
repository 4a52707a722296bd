#pragma once

#include "unicomm/types.hpp"

namespace unicomm {

/// Verdict of the determinant test for ||w1 - w2|| = 2.
struct AntipodalReport {
  Complex det_value;    // det(w1 + w2)
  double det_scale = 0.0;  // Hadamard bound of w1 + w2
  double norm_value = 0.0;  // ||w1 - w2||
  bool verdict = false;     // |det_value| <= zero_tol * det_scale
  bool consistent = true;   // verdict agrees with norm_value > 2 - 1e-6
};

AntipodalReport is_antipodal(const UnitaryMatrix& w1, const UnitaryMatrix& w2, const Tolerances& tol = {});

struct PerturbationResult {
  UnitaryMatrix u_prime;
  double t_star = 0.0;
  double new_commutator = 0.0;
  double displacement = 0.0;  // ||u' - u||
  Complex f_value;            // f(t_star)
  Complex f_at_one;           // det(2v)
  double threshold = 0.0;     // zero_tol * max(1, |f(1)|)
  int grid_index = 0;         // t_star = grid_index * t_max / grid
  double t_max = 0.0;
  bool continuity_ok = true;  // scanned |f| never jumped beyond its Lipschitz bound
};

/// f(t) = det(u(t) v + v u(t)) with u(t) = u e^{-t h}, e^h = u.
class MaxCommutatorPath {
 public:
  MaxCommutatorPath(const UnitaryPair& p, const Tolerances& tol = {});

  UnitaryMatrix u_at(double t) const;
  Complex f(double t) const;
  /// ||h||, the largest |eigenangle| of u.
  double h_norm() const { return flow_norm_; }

 private:
  UnitaryPair pair_;
  CMatrix vectors_;
  RVector angles_;
  double flow_norm_ = 0.0;
};

/// Moves u off a maximal commutator: returns u' = u(t) for the first grid
/// point t with |f(t)| above threshold and a verified ||u' v - v u'|| < 2 and
/// ||u' - u|| < delta. Throws NotAtMaximum unless ||uv - vu|| is 2 within
/// 1e-6, ScanExhausted when no grid point qualifies.
PerturbationResult perturb_off_max(const UnitaryPair& p, double delta, int grid = 10000,
                                   const Tolerances& tol = {});

}  // namespace unicomm
