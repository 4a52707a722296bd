#include "unicomm/norm_field.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "parallel.hpp"
#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"

namespace unicomm {

namespace {

constexpr int kBisections = 30;
constexpr double kMinStep = 1e-4;

struct ChainPoint {
  std::optional<UnitaryPair> pair;
  double objective = 0.0;
  double commutator = 0.0;
};

UnitaryMatrix random_diagonal(Index dim, Rng& rng) {
  CMatrix d = CMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) d(i, i) = std::polar(1.0, 2.0 * kPi * rng.uniform());
  return UnitaryMatrix::assume_unitary(std::move(d));
}

double objective(const StarPolynomial& poly, const UnitaryPair& p) { return op_norm(eval_polynomial(poly, p)); }

// Walks one chain through the whole grid; out[i] is its best point at eps_grid[i].
void run_chain(const StarPolynomial& poly, const NormFieldOptions& opts, int chain, std::vector<ChainPoint>& out) {
  Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(chain)));
  const Index dim = opts.dim;

  // Diagonal pairs commute exactly in floating point; (diag, I) is the fallback.
  UnitaryMatrix u0 = random_diagonal(dim, rng);
  UnitaryPair cur(u0, random_diagonal(dim, rng));
  if (commutator_norm(cur) > opts.eps_grid.front()) cur = UnitaryPair(u0, UnitaryMatrix::identity(dim));
  if (commutator_norm(cur) > opts.eps_grid.front()) {
    fail(ErrorCode::InfeasibleStart, "no feasible start for eps = " + std::to_string(opts.eps_grid.front()));
  }
  double cur_obj = objective(poly, cur);
  double cur_comm = commutator_norm(cur);

  for (std::size_t gi = 0; gi < opts.eps_grid.size(); ++gi) {
    const double eps = opts.eps_grid[gi];
    for (int it = 0; it < opts.iters; ++it) {
      const SkewFlow fh(random_skew_direction(dim, rng));
      const SkewFlow fk(random_skew_direction(dim, rng));
      const double rh = std::pow(kMinStep, rng.uniform());
      const double rk = std::pow(kMinStep, rng.uniform());
      const double sh = fh.norm() > 0.0 ? rh / fh.norm() : 0.0;
      const double sk = fk.norm() > 0.0 ? rk / fk.norm() : 0.0;
      auto at = [&](double t) { return UnitaryPair(cur.u() * fh.at(t * sh), cur.v() * fk.at(t * sk)); };

      std::optional<UnitaryPair> cand;
      double cand_comm = 0.0;
      {
        UnitaryPair full = at(1.0);
        const double c = commutator_norm(full);
        if (c <= eps) {
          cand.emplace(std::move(full));
          cand_comm = c;
        }
      }
      if (!cand) {
        // Largest feasible step on [0, 1] by bisection; t = 0 is the current pair.
        double lo = 0.0, hi = 1.0;
        for (int b = 0; b < kBisections; ++b) {
          const double mid = 0.5 * (lo + hi);
          UnitaryPair trial = at(mid);
          const double c = commutator_norm(trial);
          if (c <= eps) {
            lo = mid;
            cand.emplace(std::move(trial));
            cand_comm = c;
          } else {
            hi = mid;
          }
        }
      }
      if (!cand) continue;
      const double obj = objective(poly, *cand);
      if (obj > cur_obj) {
        cur = std::move(*cand);
        cur_obj = obj;
        cur_comm = cand_comm;
      }
    }
    out[gi] = ChainPoint{cur, cur_obj, cur_comm};
  }
}

}  // namespace

NormFieldCurve norm_field_estimate(const StarPolynomial& poly, const NormFieldOptions& opts) {
  if (opts.dim < 1) fail(ErrorCode::InvalidArgument, "dim must be >= 1");
  if (opts.eps_grid.empty()) fail(ErrorCode::InvalidArgument, "eps grid is empty");
  if (opts.restarts < 1 || opts.iters < 0) fail(ErrorCode::InvalidArgument, "restarts must be >= 1, iters >= 0");
  for (std::size_t i = 0; i < opts.eps_grid.size(); ++i) {
    const double e = opts.eps_grid[i];
    if (!(e >= 0.0 && e <= 2.0)) fail(ErrorCode::InvalidArgument, "eps grid values must lie in [0, 2]");
    if (i > 0 && e < opts.eps_grid[i - 1]) fail(ErrorCode::InvalidArgument, "eps grid must be ascending");
  }

  std::vector<std::vector<ChainPoint>> chains(static_cast<std::size_t>(opts.restarts),
                                              std::vector<ChainPoint>(opts.eps_grid.size()));
  detail::parallel_for(chains.size(), opts.threads,
                       [&](std::size_t c) { run_chain(poly, opts, static_cast<int>(c), chains[c]); });

  NormFieldCurve curve{poly, opts.dim, {}};
  for (std::size_t gi = 0; gi < opts.eps_grid.size(); ++gi) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < chains.size(); ++c) {
      if (chains[c][gi].objective > chains[best][gi].objective) best = c;
    }
    const ChainPoint& pt = chains[best][gi];
    curve.points.push_back(
        NormFieldPoint{opts.eps_grid[gi], pt.objective, *pt.pair, pt.commutator, static_cast<int>(best)});
  }
  return curve;
}

}  // namespace unicomm
