#pragma once

#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

/// Finite sequence u_0..u_n of unitaries with ||u_{k-1} - u_k|| <= eps.
class UnitaryChain {
 public:
  /// Throws EpsOutOfRange unless 0 < eps < 2, InvalidArgument for an empty
  /// chain, PreconditionViolated when some gap exceeds eps + tol.unitarity.
  UnitaryChain(std::vector<UnitaryMatrix> matrices, double eps, const Tolerances& tol = {});

  std::size_t size() const { return matrices_.size(); }
  /// Number of gaps, n = size() - 1.
  int steps() const { return static_cast<int>(matrices_.size()) - 1; }
  double eps() const { return eps_; }
  Index dim() const { return matrices_.front().dim(); }
  const UnitaryMatrix& operator[](std::size_t k) const { return matrices_[k]; }
  const std::vector<UnitaryMatrix>& matrices() const { return matrices_; }

  /// ||u_{k-1} - u_k|| for k = 1..n (entry k-1).
  std::vector<double> gaps() const;

 private:
  std::vector<UnitaryMatrix> matrices_;
  double eps_;
};

/// theta = d^{-1}(eps), m = cos(theta/2), t_k = 1 - 2^k sigma / m^k.
struct SmoothingSchedule {
  double theta = 0.0;
  double m = 0.0;
  double sigma = 0.0;
  std::vector<double> t;  // t[k-1] = t_k, k = 1..n
};

/// sigma = min((m/2)^n, delta m^n / (2^n theta)) / 2, which keeps every t_k in
/// (0, 1), makes 1 - t_{k+1} > (1 - t_k)/m, and bounds (1 - t_k) theta by delta.
/// When 2 sigma / m is below double resolution the stored t_k round to 1.
SmoothingSchedule build_schedule(int n, double eps, double delta);

struct SmoothingResult {
  UnitaryChain chain;
  SmoothingSchedule schedule;
  std::vector<double> gaps_before;   // size n
  std::vector<double> gaps_after;    // size n
  std::vector<double> displacement;  // ||v_k - u_k||, size n + 1
  double margin = 0.0;               // eps - max gap after smoothing, > 0
  double max_displacement = 0.0;
};

/// Replaces the chain by v_0 = u_0, v_k = e^{t_k h_k} u_{k-1} with
/// h_k = log(u_k u_{k-1}^*). The output satisfies ||v_k - u_k|| <= delta and
/// max gap < eps; both are re-measured and a violation throws
/// PostconditionFailed.
SmoothingResult smooth_chain(const UnitaryChain& chain, double delta, const Tolerances& tol = {});

/// The chain is read as indexed -N..N (size 2N + 1). The sub-chain -window..window
/// is smoothed and every index outside it is clamped to the nearest window
/// edge value. Displacements outside the window are reported but not bounded.
SmoothingResult windowed_smooth(const UnitaryChain& chain, int window, double delta,
                                const Tolerances& tol = {});

}  // namespace unicomm
