#include "unicomm/function_models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unicomm/error.hpp"

namespace unicomm {

namespace {

Index wrap_index(Index i, Index D) {
  const Index m = i % D;
  return m < 0 ? m + D : m;
}

}  // namespace

CircleGrid::CircleGrid(Index D_, Index r_) : D(D_), r(r_) {
  if (D < 2) fail(ErrorCode::InvalidArgument, "circle grid needs D >= 2");
  if (r < 1 || r >= D) fail(ErrorCode::InvalidArgument, "circle grid needs 1 <= r < D");
}

double CircleGrid::theta() const { return 2.0 * kPi * static_cast<double>(r) / static_cast<double>(D); }

Complex CircleGrid::point(Index d) const {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(wrap_index(d, D)) / static_cast<double>(D));
}

CirclePair::CirclePair(CircleGrid grid) : grid_(grid) {}

CVector CirclePair::apply_u(const CVector& xi) const {
  if (xi.size() != grid_.D) fail(ErrorCode::DimensionMismatch, "grid vector has the wrong length");
  CVector out(xi.size());
  for (Index d = 0; d < grid_.D; ++d) out(d) = grid_.point(d) * xi(d);
  return out;
}

CVector CirclePair::apply_v(const CVector& xi) const {
  if (xi.size() != grid_.D) fail(ErrorCode::DimensionMismatch, "grid vector has the wrong length");
  CVector out(xi.size());
  for (Index d = 0; d < grid_.D; ++d) out(d) = xi(wrap_index(d - grid_.r, grid_.D));
  return out;
}

double CirclePair::commutator_norm() const {
  // (uv - vu)[d, d - r] = z_d - z_{d-r}
  double best = 0.0;
  for (Index d = 0; d < grid_.D; ++d) best = std::max(best, std::abs(grid_.point(d) - grid_.point(d - grid_.r)));
  return best;
}

double CirclePair::twisted_residual() const {
  const Complex twist = std::polar(1.0, grid_.theta());
  double best = 0.0;
  for (Index d = 0; d < grid_.D; ++d) {
    best = std::max(best, std::abs(grid_.point(d) - twist * grid_.point(d - grid_.r)));
  }
  return best;
}

UnitaryPair CirclePair::to_dense() const {
  const Index D = grid_.D;
  CMatrix u = CMatrix::Zero(D, D);
  CMatrix v = CMatrix::Zero(D, D);
  for (Index d = 0; d < D; ++d) {
    u(d, d) = grid_.point(d);
    v(d, wrap_index(d - grid_.r, D)) = 1.0;
  }
  return UnitaryPair(UnitaryMatrix::assume_unitary(std::move(u)), UnitaryMatrix::assume_unitary(std::move(v)));
}

CVector bump_vector(Index D, Index center, Index width) {
  if (width < 1 || width >= D) fail(ErrorCode::InvalidArgument, "bump width must satisfy 1 <= width < D");
  CVector out = CVector::Zero(D);
  const double value = 1.0 / std::sqrt(static_cast<double>(width));
  const Index start = center - (width - 1) / 2;
  for (Index j = 0; j < width; ++j) out(wrap_index(start + j, D)) = value;
  return out;
}

RotationModelReport verify_rotation_model(int n, Index D, Index r, Index width, double delta) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "rotation model needs n >= 2");
  if (!(delta > 0.0)) fail(ErrorCode::InvalidArgument, "delta must be positive");
  const CirclePair pair{CircleGrid(D, r)};
  if (static_cast<Index>(n) * r >= D) {
    fail(ErrorCode::ParameterMismatch, "rotation angle must be below 2 pi / n (need n r < D)");
  }

  RotationModelReport rep;
  rep.n = n;
  rep.D = D;
  rep.r = r;
  rep.width = width;
  rep.delta = delta;
  rep.theta = pair.grid().theta();

  rep.xi.push_back(bump_vector(D, 0, width));
  for (int k = 1; k < n; ++k) rep.xi.push_back(pair.apply_v(rep.xi.back()));

  std::vector<int> cover(static_cast<std::size_t>(D), 0);
  for (const CVector& x : rep.xi) {
    for (Index d = 0; d < D; ++d) {
      if (x(d) != 0.0 && ++cover[static_cast<std::size_t>(d)] > 1) {
        fail(ErrorCode::ParameterMismatch, "bump supports overlap at grid point " + std::to_string(d));
      }
    }
  }

  const double comm = pair.commutator_norm();
  const double comm_bound = 2.0 * std::sin(kPi / n);
  rep.commutator = ConditionCheck{0, comm, comm_bound, comm < comm_bound};
  rep.all_pass = rep.commutator.pass;

  for (int k = 0; k < n; ++k) {
    const CVector& x = rep.xi[static_cast<std::size_t>(k)];
    const Complex omega_k = std::polar(1.0, 2.0 * kPi * k / n);
    const double spec_lhs = (pair.apply_u(x) - omega_k * x).norm();
    const double shift_lhs = (pair.apply_v(x) - rep.xi[static_cast<std::size_t>((k + 1) % n)]).norm();
    rep.spectral.push_back(ConditionCheck{k, spec_lhs, delta, spec_lhs < delta});
    rep.shift.push_back(ConditionCheck{k, shift_lhs, delta, shift_lhs < delta});
    rep.all_pass = rep.all_pass && rep.spectral.back().pass && rep.shift.back().pass;
  }
  return rep;
}

BanachDemo banach_distance_demo(int n, Index grid) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "banach demo needs n >= 1");
  if (grid < 2 * static_cast<Index>(n)) fail(ErrorCode::InvalidArgument, "banach demo needs grid >= 2n");

  BanachDemo demo;
  demo.n = n;
  demo.grid = grid;
  const double cut = 1.0 / n;
  for (Index j = 0; j <= grid; ++j) demo.nodes.push_back(static_cast<double>(j) / static_cast<double>(grid));
  if (!std::binary_search(demo.nodes.begin(), demo.nodes.end(), cut)) {
    demo.nodes.insert(std::lower_bound(demo.nodes.begin(), demo.nodes.end(), cut), cut);
  }

  demo.feasible = true;
  double sup = 0.0;
  for (double t : demo.nodes) {
    const double f = t >= cut ? 0.0 : 1.0 - n * t;
    demo.minimizer.push_back(f);
    sup = std::max(sup, std::abs(1.0 - f));
    if (t >= cut && f != 0.0) demo.feasible = false;
  }
  // Any f vanishing at t = 1 has sup |1 - f| >= 1, and this f reaches it with f(0) = 1.
  demo.exhibited_value = std::abs(1.0 - demo.minimizer.front()) + sup;
  demo.dist_to_member = 1.0;
  // The intersection is {0}; the distance is ||1|| = |1| + sup |1|.
  demo.dist_to_intersection = 2.0;
  return demo;
}

}  // namespace unicomm
