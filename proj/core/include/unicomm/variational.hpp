#pragma once

#include <optional>
#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// Clock and shift pair: the clock is diag(w, w^2, ..., w^n) with w = e^{2 pi i/n},
/// the shift is the cyclic shift e_j -> e_{j+1} (1 in the top-right corner). Their
/// multiplicative commutator is w I. Accepts n >= 2; n = 2 gives the
/// maximal pair with gamma = -I.
UnitaryPair voiculescu_pair(int n);

/// Clock and shift pair padded by an m-dimensional identity block; m = 0 gives voiculescu_pair(n).
UnitaryPair voiculescu_sum(int n, int m);

/// lambda = trace(gamma)/n when ||gamma - lambda I|| < 1e-8.
std::optional<Complex> scalar_commutator(const UnitaryPair& p);

struct LocalMinCertificate {
  Complex lambda;
  double bound = 0.0;      // |lambda - 1|
  double angle_sum = 0.0;  // sum of eigenangles of gamma, a multiple of 2 pi
  Complex det_check;       // det(gamma), equals 1
  int n = 0;
  double commutator_norm = 0.0;
};

/// Certificate that a pair with scalar multiplicative commutator lambda != -1
/// is a local minimum of the commutator norm with value |lambda - 1|.
/// Throws NotScalarCommutator, MinusOneScalar, or PostconditionFailed when a
/// certificate invariant does not hold numerically.
LocalMinCertificate certify_scalar_min(const UnitaryPair& p, const Tolerances& tol = {});

/// Orthonormal basis of u(n) under <x, y> = Re Trace(x y*):
/// i E_jj, (E_jk - E_kj)/sqrt2, i(E_jk + E_kj)/sqrt2 for j < k. Size n^2.
std::vector<CMatrix> skew_basis(Index n);

/// Orthonormal basis of su(n): the off-diagonal elements of skew_basis plus
/// the traceless diagonals i(E_11 + ... + E_kk - k E_{k+1,k+1})/sqrt(k(k+1)).
/// Size n^2 - 1.
std::vector<CMatrix> traceless_skew_basis(Index n);

/// Coordinates Re Trace(x b*) of x against each basis element.
RVector coordinates(const CMatrix& x, const std::vector<CMatrix>& basis);
CMatrix from_coordinates(const RVector& c, const std::vector<CMatrix>& basis);

/// L(h, k) = v^{-1} h v - h + k - u^{-1} k u. Up to conjugation this is the
/// differential of gamma: gamma(u e^{sh}, v e^{sk}) = gamma (I + s (vu) L (vu)^{-1}) + O(s^2).
CMatrix dgamma_apply(const UnitaryPair& p, const CMatrix& h, const CMatrix& k);

/// L as a real (n^2 - 1) x 2n^2 matrix: columns are (h-basis, then k-basis)
/// images, rows are su(n) coordinates.
RMatrix dgamma_operator(const UnitaryPair& p);

/// Rank decision from singular values. threshold = sigma_max * n^2 * eps * 100;
/// ambiguous when some singular value lies within a factor 10 of it.
struct RankDecision {
  int rank = 0;
  double threshold = 0.0;
  double sigma_max = 0.0;
  bool ambiguous = false;
};
RankDecision decide_rank(const RVector& singular_values, Index n);

/// The 2n^2 x n^2 complex system vec(x) -> (vec(xu - ux), vec(xv - vx)).
CMatrix commutant_system(const UnitaryPair& p);

/// Complex dimension of {x : xu = ux, xv = vx}. Throws RankAmbiguous.
int commutant_dim(const UnitaryPair& p);

/// Basis (as n x n matrices) of the joint commutant.
std::vector<CMatrix> commutant_basis(const UnitaryPair& p);

struct RegularityReport {
  int n = 0;
  int rank_L = 0;
  int commutant_dim = 0;
  bool irreducible = false;
  double rank_threshold = 0.0;
  double commutant_threshold = 0.0;
};

/// Throws RankAmbiguous when either rank decision is ambiguous and
/// PostconditionFailed if rank_L + commutant_dim != n^2.
RegularityReport regularity_report(const UnitaryPair& p);

}  // namespace unicomm
