#include "unicomm/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"

namespace unicomm {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 2.0)) {
    fail(ErrorCode::EpsOutOfRange, "eps must lie in (0, 2), got " + std::to_string(eps));
  }
}

double distance(const UnitaryMatrix& a, const UnitaryMatrix& b) { return op_norm(a.matrix() - b.matrix()); }

std::vector<double> chain_gaps(const std::vector<UnitaryMatrix>& ms) {
  std::vector<double> g;
  g.reserve(ms.size());
  for (std::size_t k = 1; k < ms.size(); ++k) g.push_back(distance(ms[k - 1], ms[k]));
  return g;
}

double max_or_zero(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
}

}  // namespace

UnitaryChain::UnitaryChain(std::vector<UnitaryMatrix> matrices, double eps, const Tolerances& tol)
    : matrices_(std::move(matrices)), eps_(eps) {
  check_eps(eps);
  if (matrices_.empty()) fail(ErrorCode::InvalidArgument, "a chain needs at least one matrix");
  for (const auto& m : matrices_) {
    if (m.dim() != matrices_.front().dim()) fail(ErrorCode::DimensionMismatch, "chain matrices differ in dim");
  }
  const std::vector<double> g = chain_gaps(matrices_);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] > eps + tol.unitarity) {
      fail(ErrorCode::PreconditionViolated, "gap " + std::to_string(k + 1) + " is " + std::to_string(g[k]) +
                                                " > eps = " + std::to_string(eps));
    }
  }
}

std::vector<double> UnitaryChain::gaps() const { return chain_gaps(matrices_); }

SmoothingSchedule build_schedule(int n, double eps, double delta) {
  check_eps(eps);
  if (n < 1) fail(ErrorCode::InvalidArgument, "schedule needs n >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) fail(ErrorCode::InvalidArgument, "delta must be positive and finite");

  SmoothingSchedule s;
  s.theta = d_inv(eps);
  s.m = std::cos(0.5 * s.theta);
  const double ratio = 2.0 / s.m;  // > 2
  const double growth = std::pow(ratio, n);
  s.sigma = 0.5 * std::min(std::pow(0.5 * s.m, n), delta / (growth * s.theta));
  s.t.resize(static_cast<std::size_t>(n));
  double factor = 1.0;
  for (int k = 1; k <= n; ++k) {
    factor *= ratio;
    s.t[static_cast<std::size_t>(k - 1)] = 1.0 - factor * s.sigma;
  }
  return s;
}

SmoothingResult smooth_chain(const UnitaryChain& chain, double delta, const Tolerances& tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) fail(ErrorCode::InvalidArgument, "delta must be positive and finite");
  const int n = chain.steps();

  SmoothingSchedule schedule;
  std::vector<UnitaryMatrix> out;
  out.reserve(chain.size());
  out.push_back(chain[0]);
  if (n >= 1) {
    schedule = build_schedule(n, chain.eps(), delta);
    for (int k = 1; k <= n; ++k) {
      const auto& prev = chain[static_cast<std::size_t>(k - 1)];
      const auto& cur = chain[static_cast<std::size_t>(k)];
      const SkewHermitianMatrix h = principal_log(cur * prev.adjoint(), tol);
      out.push_back(SkewFlow(h).at(schedule.t[static_cast<std::size_t>(k - 1)]) * prev);
    }
  }

  std::vector<double> disp(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k) disp[k] = distance(out[k], chain[k]);
  std::vector<double> after = chain_gaps(out);

  const double margin = chain.eps() - max_or_zero(after);
  const double max_disp = max_or_zero(disp);
  if (!(margin > 0.0)) {
    fail(ErrorCode::PostconditionFailed, "smoothed chain has gap margin " + std::to_string(margin));
  }
  if (max_disp > delta + 1e-9) {
    fail(ErrorCode::PostconditionFailed, "displacement " + std::to_string(max_disp) + " exceeds delta");
  }

  return SmoothingResult{UnitaryChain(std::move(out), chain.eps(), tol),
                         std::move(schedule),
                         chain.gaps(),
                         std::move(after),
                         std::move(disp),
                         margin,
                         max_disp};
}

SmoothingResult windowed_smooth(const UnitaryChain& chain, int window, double delta, const Tolerances& tol) {
  if (chain.size() % 2 == 0) fail(ErrorCode::InvalidArgument, "a centered chain needs odd length 2N + 1");
  const int half = static_cast<int>(chain.size() / 2);
  if (window < 0 || window > half) {
    fail(ErrorCode::InvalidArgument, "window must lie in [0, N] with N = " + std::to_string(half));
  }

  // Storage index of chain position k is k + half.
  const auto first = static_cast<std::size_t>(half - window);
  const auto last = static_cast<std::size_t>(half + window);
  std::vector<UnitaryMatrix> inner(chain.matrices().begin() + static_cast<std::ptrdiff_t>(first),
                                   chain.matrices().begin() + static_cast<std::ptrdiff_t>(last) + 1);
  SmoothingResult sub = smooth_chain(UnitaryChain(std::move(inner), chain.eps(), tol), delta, tol);

  std::vector<UnitaryMatrix> out;
  out.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::size_t j = std::clamp(i, first, last) - first;
    out.push_back(sub.chain[j]);
  }

  std::vector<double> disp(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k) disp[k] = distance(out[k], chain[k]);
  std::vector<double> after = chain_gaps(out);
  const double margin = chain.eps() - max_or_zero(after);
  if (!(margin > 0.0)) {
    fail(ErrorCode::PostconditionFailed, "windowed chain has gap margin " + std::to_string(margin));
  }
  const double max_disp = max_or_zero(disp);
  return SmoothingResult{UnitaryChain(std::move(out), chain.eps(), tol),
                         std::move(sub.schedule),
                         chain.gaps(),
                         std::move(after),
                         std::move(disp),
                         margin,
                         max_disp};
}

}  // namespace unicomm
