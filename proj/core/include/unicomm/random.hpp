#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "unicomm/types.hpp"

namespace unicomm {

/// Seeded generator used for every random draw in the library.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives uniforms and normals by hand instead of through the
/// implementation-defined std distributions, so a seed reproduces the same
/// bits across standard libraries.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64+box-muller/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, spare value cached).
  double normal();
  /// (a + ib)/sqrt(2) with a, b standard normal.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Independent stream seed from (seed, stream) via splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal folded back into Q.
UnitaryMatrix random_unitary(Index dim, Rng& rng);
UnitaryMatrix random_unitary(Index dim, std::uint64_t seed);

/// (G - G*)/2 for complex Gaussian G; unnormalized.
SkewHermitianMatrix random_skew_direction(Index dim, Rng& rng);

/// Random skew-Hermitian matrix rescaled to operator norm norm_bound (never above).
SkewHermitianMatrix random_skew(Index dim, Rng& rng, double norm_bound);
SkewHermitianMatrix random_skew(Index dim, std::uint64_t seed, double norm_bound);

}  // namespace unicomm
