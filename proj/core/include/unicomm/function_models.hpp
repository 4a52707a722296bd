#pragma once

#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// D points on the unit circle and a rotation by r grid steps.
struct CircleGrid {
  Index D = 0;
  Index r = 0;

  CircleGrid(Index D, Index r);  // requires 1 <= r < D
  double theta() const;          // 2 pi r / D
  Complex point(Index d) const;  // e^{2 pi i d / D}
};

/// Multiplication by z and pullback by rotation on the grid, kept in
/// structured form so large D never needs a dense matrix.
///   (u xi)[d] = z_d xi[d]
///   (v xi)[d] = xi[(d - r) mod D]
/// u v = e^{i theta} v u holds entrywise.
class CirclePair {
 public:
  explicit CirclePair(CircleGrid grid);

  const CircleGrid& grid() const { return grid_; }
  CVector apply_u(const CVector& xi) const;
  CVector apply_v(const CVector& xi) const;

  /// uv - vu is a weighted permutation, so its norm is the largest entry.
  double commutator_norm() const;
  /// ||uv - e^{i theta} vu||.
  double twisted_residual() const;
  UnitaryPair to_dense() const;

 private:
  CircleGrid grid_;
};

/// Flat unit vector on `width` consecutive points starting at
/// center - (width - 1) / 2, indices taken mod D.
CVector bump_vector(Index D, Index center, Index width);

struct ConditionCheck {
  int k = 0;
  double lhs = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct RotationModelReport {
  int n = 0;
  Index D = 0;
  Index r = 0;
  Index width = 0;
  double delta = 0.0;
  double theta = 0.0;
  ConditionCheck commutator;            // ||u'v' - v'u'|| < 2 sin(pi/n)
  std::vector<ConditionCheck> spectral; // ||u' xi_k - omega^k xi_k|| < delta
  std::vector<ConditionCheck> shift;    // ||v' xi_k - xi_{k+1 mod n}|| < delta
  std::vector<CVector> xi;              // xi_k = v'^k xi_0, k = 0..n-1
  bool all_pass = false;
};

/// Builds xi_0 as a bump at z = 1 and checks the three approximation
/// conditions for k = 0..n-1. At k = n-1 the shift condition compares
/// v'^n xi_0 with xi_0. Throws ParameterMismatch when n r >= D or when the
/// supports of xi_0..xi_{n-1} overlap.
RotationModelReport verify_rotation_model(int n, Index D, Index r, Index width, double delta);

struct BanachDemo {
  int n = 0;
  Index grid = 0;
  double dist_to_member = 0.0;        // 1 for every n
  double dist_to_intersection = 0.0;  // 2
  std::vector<double> nodes;          // uniform grid plus 1/n, ascending
  std::vector<double> minimizer;      // max(0, 1 - n t) at the nodes
  double exhibited_value = 0.0;       // |1 - f(0)| + max |1 - f(t)|
  bool feasible = false;              // f == 0 at every node t >= 1/n
};

/// Distance from the constant 1 to the piecewise-linear functions vanishing
/// on [1/n, 1], under |f(0)| + sup |f|. Requires n >= 1 and grid >= 2n.
BanachDemo banach_distance_demo(int n, Index grid);

}  // namespace unicomm
