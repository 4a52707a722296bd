#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// Which skew directions a probe draws.
///   Dense         full random skew-Hermitian matrices;
///   IdentityBlock supported on the trailing block (rows/cols >= split);
///   Coupling      supported on the two off-diagonal blocks only.
enum class ProbeFamily { Dense, IdentityBlock, Coupling };

std::string_view to_string(ProbeFamily f);
ProbeFamily probe_family_from_string(std::string_view s);

struct ProbeConfig {
  double radius = 0.05;  // operator-norm bound on each skew generator
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  UnitaryPair baseline;
  ProbeFamily family = ProbeFamily::Dense;
  Index split = 0;  // leading block size for the structured families
  int threads = 1;  // worker cap; never changes the result

  void validate() const;
};

struct ProbeReport {
  double baseline = 0.0;
  double best_found = 0.0;
  UnitaryPair best_pair;
  bool decrease_found = false;
  std::int64_t samples_run = 0;
  std::uint64_t seed = 0;
  double radius = 0.0;
  ProbeFamily family = ProbeFamily::Dense;
  std::int64_t best_index = -1;  // -1 when the baseline itself is best
};

/// Samples (u e^h, v e^k) with h, k random directions in the chosen family,
/// each rescaled to an operator norm drawn log-uniformly in
/// [radius/100, radius]. Samples run in fixed batches, each seeded from
/// (seed, batch index), and batches merge in index order, so the report is
/// bit-identical for any thread count.
ProbeReport local_probe(const ProbeConfig& cfg);

struct ConjectureReport {
  int n = 0;
  int m = 0;
  double baseline = 0.0;  // 2 sin(pi/n)
  std::vector<ProbeReport> reports;  // radius-major, then Dense, IdentityBlock, Coupling
  bool any_decrease = false;
};

/// Probes around the padded clock and shift pair voiculescu_sum(n, m) for every radius and every
/// family (only Dense when m = 0). The first (radius, Dense) report uses
/// `seed` itself, so m = 0 with one radius reproduces local_probe.
/// The output is evidence only; it never certifies a minimum.
ConjectureReport conjecture_probe(int n, int m, const std::vector<double>& radii, std::int64_t samples,
                                  std::uint64_t seed, int threads = 1);

}  // namespace unicomm
