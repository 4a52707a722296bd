#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"
#include "unicomm/types.hpp"

namespace fixture {

using namespace unicomm;

inline UnitaryPair random_pair(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  UnitaryMatrix u = random_unitary(dim, rng);
  return UnitaryPair(u, random_unitary(dim, rng));
}

/// (diag(1, -1), [[0, 1], [1, 0]]), commutator norm 2.
inline UnitaryPair flip_pair() {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return UnitaryPair(UnitaryMatrix(d), UnitaryMatrix(x));
}

/// flip_pair plus a random block of dim seed % 5, rotated by a random unitary.
inline UnitaryPair maximal_pair(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 17));
  const Index extra = static_cast<Index>(seed % 5);
  UnitaryPair p = flip_pair();
  if (extra > 0) {
    UnitaryMatrix a = random_unitary(extra, rng);
    p = direct_sum(p, UnitaryPair(a, random_unitary(extra, rng)));
  }
  return conjugate(p, random_unitary(p.dim(), rng));
}

/// (w, w r) with r = q diag(-1, e^{i a_2}, ...) q*, so ||w - w r|| = 2.
inline UnitaryPair antipodal_pair(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  const UnitaryMatrix w = random_unitary(dim, rng);
  const UnitaryMatrix q = random_unitary(dim, rng);
  CVector phases(dim);
  phases(0) = -1.0;
  for (Index i = 1; i < dim; ++i) phases(i) = std::polar(1.0, (2.0 * rng.uniform() - 1.0) * 0.9 * kPi);
  const CMatrix r = q.matrix() * phases.asDiagonal() * q.matrix().adjoint();
  return UnitaryPair(w, UnitaryMatrix(w.matrix() * r));
}

/// (w, w r) with every eigenangle of r inside [-0.9 pi, 0.9 pi], so
/// ||w - w r|| <= 2 sin(0.45 pi) < 2.
inline UnitaryPair separated_pair(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  const UnitaryMatrix w = random_unitary(dim, rng);
  const UnitaryMatrix q = random_unitary(dim, rng);
  CVector phases(dim);
  for (Index i = 0; i < dim; ++i) phases(i) = std::polar(1.0, (2.0 * rng.uniform() - 1.0) * 0.9 * kPi);
  const CMatrix r = q.matrix() * phases.asDiagonal() * q.matrix().adjoint();
  return UnitaryPair(w, UnitaryMatrix(w.matrix() * r));
}

/// u_0 random, u_k = u_{k-1} e^{h_k} with ||h_k|| <= d^{-1}(eps), so every gap is <= eps.
inline std::vector<UnitaryMatrix> random_chain(Index dim, int length, double eps, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<UnitaryMatrix> out{random_unitary(dim, rng)};
  const double theta = d_inv(eps);
  for (int k = 1; k < length; ++k) {
    const double bound = theta * (0.2 + 0.8 * rng.uniform());
    out.push_back(out.back() * exp_skew(random_skew(dim, rng, bound)));
  }
  return out;
}

/// Random irreducible 3-dim pair plus a commuting 1-dim block, rotated. The
/// attaining block is the 3-dim one, whose gamma is not a scalar.
inline UnitaryPair counter_pair(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 29));
  UnitaryMatrix a = random_unitary(3, rng);
  UnitaryPair big(a, random_unitary(3, rng));
  CMatrix s(1, 1), t(1, 1);
  s(0, 0) = std::polar(1.0, 2.0 * kPi * rng.uniform());
  t(0, 0) = std::polar(1.0, 2.0 * kPi * rng.uniform());
  UnitaryPair p = direct_sum(big, UnitaryPair(UnitaryMatrix(s), UnitaryMatrix(t)));
  return conjugate(p, random_unitary(4, rng));
}

inline double dist(const UnitaryMatrix& a, const UnitaryMatrix& b) { return op_norm(a.matrix() - b.matrix()); }

}  // namespace fixture
