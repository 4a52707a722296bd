#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unicomm/types.hpp"

namespace unicomm {

struct PairBlock {
  UnitaryPair pair;
  double commutator_norm = 0.0;

  Index dim() const { return pair.dim(); }
};

/// u = basis* (u_1 + u_2 + ...) basis and likewise for v, each block pair
/// irreducible.
struct PairDecomposition {
  std::vector<PairBlock> blocks;
  UnitaryMatrix basis;
  double max_commutator = 0.0;
  std::vector<int> attaining;         // blocks whose norm is within 1e-9 of the max
  double reconstruction_error = 0.0;  // max over u, v of the operator-norm residual
};

/// Splits a pair into irreducible blocks by diagonalizing a random Hermitian
/// element of the joint commutant and recursing on its eigenspaces. Throws
/// DegenerateSplit after 8 draws without an eigenvalue gap > 1e-7, and
/// PostconditionFailed if the reconstruction misses by more than 1e-8.
PairDecomposition decompose_pair(const UnitaryPair& p, std::uint64_t seed);

struct BlockVerdict {
  int index = 0;
  Index dim = 0;
  double commutator_norm = 0.0;
  bool attaining = false;
  std::optional<Complex> scalar;  // set when the block's gamma is a scalar
};

struct AttainingBlockReport {
  PairDecomposition decomposition;
  std::vector<BlockVerdict> blocks;
  /// Some norm-attaining block has a scalar multiplicative commutator,
  /// which every local minimum must satisfy.
  bool holds = false;
};

AttainingBlockReport check_attaining_blocks(const UnitaryPair& p, std::uint64_t seed);

}  // namespace unicomm
