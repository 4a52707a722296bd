#include "unicomm/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "unicomm/error.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"
#include "unicomm/variational.hpp"

namespace unicomm {

namespace {

constexpr int kSplitAttempts = 8;
constexpr double kClusterGap = 1e-7;

struct Split {
  std::vector<UnitaryPair> blocks;
  CMatrix basis;  // u = basis* (+ blocks) basis
};

// Nearest unitary in operator norm (polar factor).
UnitaryMatrix polar_unitary(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return UnitaryMatrix::assume_unitary(svd.matrixU() * svd.matrixV().adjoint());
}

// Index ranges [first, last) of eigenvalue clusters; values sorted ascending.
std::vector<std::pair<Index, Index>> clusters(const RVector& values) {
  std::vector<std::pair<Index, Index>> out;
  Index start = 0;
  for (Index i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values(i) - values(i - 1) > kClusterGap) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

Split split_pair(const UnitaryPair& p, std::uint64_t seed) {
  const Index n = p.dim();
  const std::vector<CMatrix> commutant = commutant_basis(p);
  if (commutant.size() <= 1) return Split{{p}, CMatrix::Identity(n, n)};

  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    CMatrix c = CMatrix::Zero(n, n);
    for (const auto& b : commutant) c += rng.complex_normal() * b;
    // The commutant is a *-algebra, so its Hermitian part lies in it too.
    CMatrix herm = 0.5 * (c + c.adjoint());
    herm -= (herm.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
    const double scale = herm.norm();
    if (scale < 1e-12) continue;
    herm /= scale;

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
    const auto groups = clusters(solver.eigenvalues());
    if (groups.size() < 2) continue;

    const CMatrix& vecs = solver.eigenvectors();
    Split out;
    out.basis = CMatrix::Zero(n, n);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto [first, last] = groups[g];
      const CMatrix cols = vecs.middleCols(first, last - first);
      const UnitaryPair block(polar_unitary(cols.adjoint() * p.u().matrix() * cols),
                              polar_unitary(cols.adjoint() * p.v().matrix() * cols));
      Split sub = split_pair(block, derive_seed(seed, 1000 + g));
      out.basis.middleRows(first, last - first) = sub.basis * cols.adjoint();
      for (auto& b : sub.blocks) out.blocks.push_back(std::move(b));
    }
    return out;
  }
  fail(ErrorCode::DegenerateSplit,
       "no commutant element with an eigenvalue gap > 1e-7 after " + std::to_string(kSplitAttempts) + " draws");
}

CMatrix block_diagonal(const std::vector<PairBlock>& blocks, bool take_u) {
  Index n = 0;
  for (const auto& b : blocks) n += b.dim();
  CMatrix m = CMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& b : blocks) {
    m.block(at, at, b.dim(), b.dim()) = take_u ? b.pair.u().matrix() : b.pair.v().matrix();
    at += b.dim();
  }
  return m;
}

}  // namespace

PairDecomposition decompose_pair(const UnitaryPair& p, std::uint64_t seed) {
  Split split = split_pair(p, seed);

  std::vector<PairBlock> blocks;
  blocks.reserve(split.blocks.size());
  double max_comm = 0.0;
  for (auto& b : split.blocks) {
    const double c = commutator_norm(b);
    max_comm = std::max(max_comm, c);
    blocks.push_back(PairBlock{std::move(b), c});
  }
  std::vector<int> attaining;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (std::abs(blocks[j].commutator_norm - max_comm) <= 1e-9) attaining.push_back(static_cast<int>(j));
  }

  const CMatrix& basis = split.basis;
  const double err_u = op_norm(basis.adjoint() * block_diagonal(blocks, true) * basis - p.u().matrix());
  const double err_v = op_norm(basis.adjoint() * block_diagonal(blocks, false) * basis - p.v().matrix());
  const double err = std::max(err_u, err_v);
  if (err > 1e-8) {
    fail(ErrorCode::PostconditionFailed, "block reconstruction misses by " + std::to_string(err));
  }
  return PairDecomposition{std::move(blocks), UnitaryMatrix::assume_unitary(basis), max_comm,
                           std::move(attaining), err};
}

AttainingBlockReport check_attaining_blocks(const UnitaryPair& p, std::uint64_t seed) {
  AttainingBlockReport r{decompose_pair(p, seed), {}, false};
  const auto& d = r.decomposition;
  for (std::size_t j = 0; j < d.blocks.size(); ++j) {
    BlockVerdict bv;
    bv.index = static_cast<int>(j);
    bv.dim = d.blocks[j].dim();
    bv.commutator_norm = d.blocks[j].commutator_norm;
    bv.attaining = std::find(d.attaining.begin(), d.attaining.end(), bv.index) != d.attaining.end();
    bv.scalar = scalar_commutator(d.blocks[j].pair);
    if (bv.attaining && bv.scalar) r.holds = true;
    r.blocks.push_back(bv);
  }
  return r;
}

}  // namespace unicomm
