#include "unicomm/probe.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"
#include "unicomm/variational.hpp"

namespace unicomm {

namespace {

constexpr std::int64_t kBatchSize = 4096;

SkewHermitianMatrix draw_direction(ProbeFamily family, Index dim, Index split, Rng& rng) {
  switch (family) {
    case ProbeFamily::Dense:
      return random_skew_direction(dim, rng);
    case ProbeFamily::IdentityBlock: {
      CMatrix h = CMatrix::Zero(dim, dim);
      h.bottomRightCorner(dim - split, dim - split) = random_skew_direction(dim - split, rng).matrix();
      return SkewHermitianMatrix::assume_skew(std::move(h));
    }
    case ProbeFamily::Coupling: {
      CMatrix g(split, dim - split);
      for (Index i = 0; i < g.rows(); ++i) {
        for (Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
      }
      CMatrix h = CMatrix::Zero(dim, dim);
      h.topRightCorner(split, dim - split) = g;
      h.bottomLeftCorner(dim - split, split) = -g.adjoint();
      return SkewHermitianMatrix::assume_skew(std::move(h));
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown probe family");
}

// e^{r d/||d||}
UnitaryMatrix scaled_exp(const SkewHermitianMatrix& direction, double r) {
  const SkewFlow flow(direction);
  if (flow.norm() == 0.0) return UnitaryMatrix::identity(direction.dim());
  return flow.at(r / flow.norm());
}

struct BatchBest {
  std::optional<UnitaryPair> pair;
  double value = 0.0;
  std::int64_t index = -1;
};

}  // namespace

std::string_view to_string(ProbeFamily f) {
  switch (f) {
    case ProbeFamily::Dense: return "dense";
    case ProbeFamily::IdentityBlock: return "identity-block";
    case ProbeFamily::Coupling: return "coupling";
  }
  return "unknown";
}

ProbeFamily probe_family_from_string(std::string_view s) {
  if (s == "dense") return ProbeFamily::Dense;
  if (s == "identity-block") return ProbeFamily::IdentityBlock;
  if (s == "coupling") return ProbeFamily::Coupling;
  fail(ErrorCode::InvalidArgument, "unknown probe family '" + std::string(s) + "'");
}

void ProbeConfig::validate() const {
  if (!(radius > 0.0 && radius <= 2.0)) fail(ErrorCode::InvalidArgument, "radius must lie in (0, 2]");
  if (samples < 1) fail(ErrorCode::InvalidArgument, "samples must be >= 1");
  if (family != ProbeFamily::Dense && (split < 1 || split >= baseline.dim())) {
    fail(ErrorCode::InvalidArgument, "structured probe families need 1 <= split < dim");
  }
}

ProbeReport local_probe(const ProbeConfig& cfg) {
  cfg.validate();
  const Index dim = cfg.baseline.dim();
  const double baseline = commutator_norm(cfg.baseline);
  const auto batches = static_cast<std::size_t>((cfg.samples + kBatchSize - 1) / kBatchSize);
  std::vector<BatchBest> best(batches);

  detail::parallel_for(batches, cfg.threads, [&](std::size_t b) {
    Rng rng(derive_seed(cfg.seed, b));
    const std::int64_t first = static_cast<std::int64_t>(b) * kBatchSize;
    const std::int64_t last = std::min(cfg.samples, first + kBatchSize);
    BatchBest& out = best[b];
    for (std::int64_t s = first; s < last; ++s) {
      const SkewHermitianMatrix hd = draw_direction(cfg.family, dim, cfg.split, rng);
      const SkewHermitianMatrix kd = draw_direction(cfg.family, dim, cfg.split, rng);
      const double rh = cfg.radius * std::pow(0.01, rng.uniform());
      const double rk = cfg.radius * std::pow(0.01, rng.uniform());
      UnitaryPair cand(cfg.baseline.u() * scaled_exp(hd, rh), cfg.baseline.v() * scaled_exp(kd, rk));
      const double c = commutator_norm(cand);
      if (!out.pair || c < out.value) {
        out.pair.emplace(std::move(cand));
        out.value = c;
        out.index = s;
      }
    }
  });

  ProbeReport r{baseline, baseline, cfg.baseline, false, cfg.samples, cfg.seed, cfg.radius, cfg.family, -1};
  for (const auto& b : best) {
    if (b.pair && b.value < r.best_found) {
      r.best_found = b.value;
      r.best_pair = *b.pair;
      r.best_index = b.index;
    }
  }
  r.decrease_found = r.best_found < baseline - 1e-12;
  return r;
}

ConjectureReport conjecture_probe(int n, int m, const std::vector<double>& radii, std::int64_t samples,
                                  std::uint64_t seed, int threads) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "conjecture_probe needs n >= 3");
  if (m < 0) fail(ErrorCode::InvalidArgument, "conjecture_probe needs m >= 0");
  if (radii.empty()) fail(ErrorCode::InvalidArgument, "conjecture_probe needs at least one radius");

  ConjectureReport out;
  out.n = n;
  out.m = m;
  const UnitaryPair base = voiculescu_sum(n, m);
  out.baseline = commutator_norm(base);

  std::vector<ProbeFamily> families{ProbeFamily::Dense};
  if (m > 0) {
    families.push_back(ProbeFamily::IdentityBlock);
    families.push_back(ProbeFamily::Coupling);
  }
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      const std::uint64_t stream = ri * 3 + fi;
      ProbeConfig cfg{radii[ri], samples, stream == 0 ? seed : derive_seed(seed, stream), base, families[fi],
                      static_cast<Index>(n), threads};
      out.reports.push_back(local_probe(cfg));
      out.any_decrease = out.any_decrease || out.reports.back().decrease_found;
    }
  }
  return out;
}

}  // namespace unicomm
