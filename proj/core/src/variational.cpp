#include "unicomm/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/SVD>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"

namespace unicomm {

UnitaryPair voiculescu_pair(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "voiculescu_pair needs n >= 2, got " + std::to_string(n));
  CMatrix omega = CMatrix::Zero(n, n);
  CMatrix shift = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    // w^{j+1}; reducing the exponent mod n keeps w^n exactly 1.
    omega(j, j) = std::polar(1.0, 2.0 * kPi * static_cast<double>((j + 1) % n) / n);
    shift((j + 1) % n, j) = 1.0;
  }
  return UnitaryPair(UnitaryMatrix::assume_unitary(std::move(omega)),
                     UnitaryMatrix::assume_unitary(std::move(shift)));
}

UnitaryPair voiculescu_sum(int n, int m) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be >= 0");
  UnitaryPair base = voiculescu_pair(n);
  if (m == 0) return base;
  const UnitaryMatrix id = UnitaryMatrix::identity(m);
  return direct_sum(base, UnitaryPair(id, id));
}

std::optional<Complex> scalar_commutator(const UnitaryPair& p) {
  const CMatrix g = gamma(p).matrix();
  const auto n = static_cast<double>(p.dim());
  const Complex lambda = g.trace() / n;
  const CMatrix residual = g - lambda * CMatrix::Identity(p.dim(), p.dim());
  if (op_norm(residual) < 1e-8) return lambda;
  return std::nullopt;
}

LocalMinCertificate certify_scalar_min(const UnitaryPair& p, const Tolerances& tol) {
  const std::optional<Complex> lambda = scalar_commutator(p);
  if (!lambda) fail(ErrorCode::NotScalarCommutator, "multiplicative commutator is not a scalar");
  if (std::abs(*lambda + 1.0) <= tol.angle) {
    fail(ErrorCode::MinusOneScalar, "multiplicative commutator is -I; the pair sits at the maximum norm 2");
  }

  const UnitaryMatrix g = gamma(p);
  LocalMinCertificate c;
  c.lambda = *lambda;
  c.bound = std::abs(*lambda - 1.0);
  c.n = static_cast<int>(p.dim());
  const std::vector<double> angles = unitary_angles(g, tol);
  c.angle_sum = std::accumulate(angles.begin(), angles.end(), 0.0);
  c.det_check = determinant(g.matrix());
  c.commutator_norm = commutator_norm(p);

  const double turns = c.angle_sum / (2.0 * kPi);
  if (std::abs(std::abs(c.lambda) - 1.0) > 1e-9 || std::abs(c.det_check - 1.0) > 1e-9 ||
      std::abs(turns - std::round(turns)) * 2.0 * kPi > 1e-6 || std::abs(c.bound - c.commutator_norm) > 1e-9) {
    fail(ErrorCode::PostconditionFailed, "certificate invariants failed numerically");
  }
  return c;
}

std::vector<CMatrix> skew_basis(Index n) {
  const Complex i(0.0, 1.0);
  const double r = M_SQRT1_2;
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  for (Index j = 0; j < n; ++j) {
    CMatrix e = CMatrix::Zero(n, n);
    e(j, j) = i;
    basis.push_back(std::move(e));
  }
  for (Index j = 0; j < n; ++j) {
    for (Index k = j + 1; k < n; ++k) {
      CMatrix a = CMatrix::Zero(n, n);
      a(j, k) = r;
      a(k, j) = -r;
      basis.push_back(std::move(a));
      CMatrix s = CMatrix::Zero(n, n);
      s(j, k) = i * r;
      s(k, j) = i * r;
      basis.push_back(std::move(s));
    }
  }
  return basis;
}

std::vector<CMatrix> traceless_skew_basis(Index n) {
  const Complex i(0.0, 1.0);
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * n - 1));
  for (Index k = 1; k < n; ++k) {
    CMatrix d = CMatrix::Zero(n, n);
    const double norm = std::sqrt(static_cast<double>(k * (k + 1)));
    for (Index j = 0; j < k; ++j) d(j, j) = i / norm;
    d(k, k) = -static_cast<double>(k) * i / norm;
    basis.push_back(std::move(d));
  }
  std::vector<CMatrix> full = skew_basis(n);
  for (auto it = full.begin() + n; it != full.end(); ++it) basis.push_back(std::move(*it));
  return basis;
}

RVector coordinates(const CMatrix& x, const std::vector<CMatrix>& basis) {
  RVector c(static_cast<Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    c(static_cast<Index>(b)) = basis[b].conjugate().cwiseProduct(x).sum().real();
  }
  return c;
}

CMatrix from_coordinates(const RVector& c, const std::vector<CMatrix>& basis) {
  if (basis.empty() || c.size() != static_cast<Index>(basis.size())) {
    fail(ErrorCode::DimensionMismatch, "coordinate vector does not match basis");
  }
  CMatrix x = CMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t b = 0; b < basis.size(); ++b) x += c(static_cast<Index>(b)) * basis[b];
  return x;
}

CMatrix dgamma_apply(const UnitaryPair& p, const CMatrix& h, const CMatrix& k) {
  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  return v.adjoint() * h * v - h + k - u.adjoint() * k * u;
}

RMatrix dgamma_operator(const UnitaryPair& p) {
  const Index n = p.dim();
  const std::vector<CMatrix> domain = skew_basis(n);
  const std::vector<CMatrix> target = traceless_skew_basis(n);
  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  const auto nd = static_cast<Index>(domain.size());
  RMatrix op(static_cast<Index>(target.size()), 2 * nd);
  for (Index b = 0; b < nd; ++b) {
    const CMatrix& e = domain[static_cast<std::size_t>(b)];
    op.col(b) = coordinates(v.adjoint() * e * v - e, target);
    op.col(nd + b) = coordinates(e - u.adjoint() * e * u, target);
  }
  return op;
}

RankDecision decide_rank(const RVector& singular_values, Index n) {
  RankDecision d;
  if (singular_values.size() == 0) return d;
  d.sigma_max = singular_values.maxCoeff();
  d.threshold = d.sigma_max * static_cast<double>(n * n) * std::numeric_limits<double>::epsilon() * 100.0;
  for (Index i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (s > d.threshold) ++d.rank;
    if (d.threshold > 0.0 && s > d.threshold / 10.0 && s < d.threshold * 10.0) d.ambiguous = true;
  }
  return d;
}

CMatrix commutant_system(const UnitaryPair& p) {
  const Index n = p.dim();
  const CMatrix& u = p.u().matrix();
  const CMatrix& v = p.v().matrix();
  const Index nn = n * n;
  CMatrix sys = CMatrix::Zero(2 * nn, nn);
  // Column-major vec: x(r, c) is unknown r + c n.
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const Index row = r + c * n;
      for (Index j = 0; j < n; ++j) {
        sys(row, r + j * n) += u(j, c);       // (x u)(r, c)
        sys(row, j + c * n) -= u(r, j);       // (u x)(r, c)
        sys(nn + row, r + j * n) += v(j, c);
        sys(nn + row, j + c * n) -= v(r, j);
      }
    }
  }
  return sys;
}

namespace {

struct CommutantSolve {
  RankDecision rank;
  std::vector<CMatrix> basis;
};

CommutantSolve solve_commutant(const UnitaryPair& p, bool want_basis) {
  const Index n = p.dim();
  const CMatrix sys = commutant_system(p);
  Eigen::JacobiSVD<CMatrix> svd(sys, want_basis ? Eigen::ComputeFullV : 0);
  CommutantSolve out;
  out.rank = decide_rank(svd.singularValues(), n);
  if (out.rank.ambiguous) {
    fail(ErrorCode::RankAmbiguous, "a singular value of the commutant system lies within 10x of the threshold");
  }
  if (want_basis) {
    const CMatrix& vmat = svd.matrixV();
    for (Index c = out.rank.rank; c < n * n; ++c) {
      out.basis.push_back(Eigen::Map<const CMatrix>(vmat.col(c).data(), n, n));
    }
  }
  return out;
}

}  // namespace

int commutant_dim(const UnitaryPair& p) {
  const Index n = p.dim();
  return static_cast<int>(n * n) - solve_commutant(p, false).rank.rank;
}

std::vector<CMatrix> commutant_basis(const UnitaryPair& p) { return solve_commutant(p, true).basis; }

RegularityReport regularity_report(const UnitaryPair& p) {
  const Index n = p.dim();
  RegularityReport r;
  r.n = static_cast<int>(n);

  const RMatrix op = dgamma_operator(p);
  RankDecision lr;
  if (op.size() > 0) {
    Eigen::JacobiSVD<RMatrix> svd(op);
    lr = decide_rank(svd.singularValues(), n);
  }
  if (lr.ambiguous) {
    fail(ErrorCode::RankAmbiguous, "a singular value of L lies within 10x of the rank threshold");
  }
  const CommutantSolve cs = solve_commutant(p, false);

  r.rank_L = lr.rank;
  r.rank_threshold = lr.threshold;
  r.commutant_dim = static_cast<int>(n * n) - cs.rank.rank;
  r.commutant_threshold = cs.rank.threshold;
  r.irreducible = r.commutant_dim == 1;
  if (r.rank_L + r.commutant_dim != n * n) {
    fail(ErrorCode::PostconditionFailed, "rank_L + commutant_dim = " + std::to_string(r.rank_L + r.commutant_dim) +
                                             " != n^2 = " + std::to_string(n * n));
  }
  return r;
}

}  // namespace unicomm
