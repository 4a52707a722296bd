#include "unicomm/random.hpp"

#include <cmath>
#include <limits>

#include <Eigen/QR>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"

namespace unicomm {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  spare_ = radius * std::sin(2.0 * kPi * u2);
  has_spare_ = true;
  return radius * std::cos(2.0 * kPi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * M_SQRT1_2;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

CMatrix ginibre(Index dim, Rng& rng) {
  CMatrix g(dim, dim);
  // Fill row-major so the draw order does not depend on Eigen's storage.
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

}  // namespace

UnitaryMatrix random_unitary(Index dim, Rng& rng) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "random_unitary needs dim >= 1");
  const CMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return UnitaryMatrix::assume_unitary(std::move(q));
}

UnitaryMatrix random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

SkewHermitianMatrix random_skew_direction(Index dim, Rng& rng) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "random skew needs dim >= 1");
  const CMatrix g = ginibre(dim, rng);
  return SkewHermitianMatrix::assume_skew(0.5 * (g - g.adjoint()));
}

SkewHermitianMatrix random_skew(Index dim, Rng& rng, double norm_bound) {
  if (!(norm_bound >= 0.0) || !std::isfinite(norm_bound)) {
    fail(ErrorCode::InvalidArgument, "norm_bound must be a finite value >= 0");
  }
  const SkewHermitianMatrix dir = random_skew_direction(dim, rng);
  const double n0 = op_norm(dir.matrix());
  if (norm_bound == 0.0 || n0 == 0.0) return SkewHermitianMatrix::zero(dim);
  // Shave a few ulps so roundoff in the rescale cannot overshoot the bound.
  const double scale = norm_bound / n0 * (1.0 - 8.0 * std::numeric_limits<double>::epsilon());
  return dir * scale;
}

SkewHermitianMatrix random_skew(Index dim, std::uint64_t seed, double norm_bound) {
  Rng rng(seed);
  return random_skew(dim, rng, norm_bound);
}

}  // namespace unicomm
