#include <cmath>

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "unicomm/json_io.hpp"
#include "unicomm/linalg.hpp"
#include "unicomm/random.hpp"
#include "unicomm/variational.hpp"

namespace {

using namespace unicomm;

CMatrix diag2(Complex a, Complex b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

TEST(OpNorm, IdentityDiagonalAndRotation) {
  EXPECT_DOUBLE_EQ(op_norm(CMatrix::Identity(3, 3)), 1.0);
  EXPECT_NEAR(op_norm(diag2(Complex(0, 2), 1.0)), 2.0, 1e-15);
  CMatrix r(2, 2);
  r << 0.0, 2.0, -2.0, 0.0;
  EXPECT_NEAR(op_norm(r), 2.0, 1e-15);
  EXPECT_EQ(op_norm(CMatrix::Zero(4, 4)), 0.0);
}

TEST(OpNorm, RejectsNonSquare) { EXPECT_ERROR_CODE(op_norm(CMatrix::Zero(2, 3)), ErrorCode::DimensionMismatch); }

TEST(OpNorm, AgreesWithPowerIterationOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + trial % 6;
    CMatrix a(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    }
    EXPECT_NEAR(op_norm(a), oracle::power_norm(a), 1e-9 * op_norm(a)) << "trial " << trial;
  }
}

TEST(OpNorm, SubmultiplicativeAndUnitarilyInvariant) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 5;
    CMatrix a(n, n), b(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        a(i, j) = rng.complex_normal();
        b(i, j) = rng.complex_normal();
      }
    }
    const UnitaryMatrix u = random_unitary(n, rng);
    const UnitaryMatrix v = random_unitary(n, rng);
    EXPECT_LE(op_norm(a * b), op_norm(a) * op_norm(b) + 1e-10);
    EXPECT_NEAR(op_norm(u.matrix() * a * v.matrix()), op_norm(a), 1e-10);
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(5);
  for (Index n = 1; n <= 6; ++n) {
    CMatrix a(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    }
    EXPECT_LT(std::abs(determinant(a) - oracle::laplace_det(a)), 1e-10 * hadamard_scale(a));
  }
}

TEST(Determinant, HadamardBoundsModulus) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + trial % 6;
    CMatrix a(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    }
    EXPECT_LE(std::abs(determinant(a)), hadamard_scale(a) * (1 + 1e-12));
  }
}

TEST(CommutatorNorm, ReferencePairs) {
  const UnitaryPair id(UnitaryMatrix::identity(3), UnitaryMatrix::identity(3));
  EXPECT_EQ(commutator_norm(id), 0.0);
  EXPECT_NEAR(commutator_norm(voiculescu_pair(3)), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(commutator_norm(fixture::flip_pair()), 2.0, 1e-15);
}

TEST(Gamma, ReferencePairs) {
  const UnitaryMatrix v = random_unitary(3, 1);
  EXPECT_LT(op_norm(gamma(UnitaryPair(UnitaryMatrix::identity(3), v)).matrix() - CMatrix::Identity(3, 3)), 1e-14);
  const UnitaryPair d(UnitaryMatrix(diag2(std::polar(1.0, 0.3), std::polar(1.0, -1.1))),
                      UnitaryMatrix(diag2(std::polar(1.0, 2.0), Complex(0, 1))));
  EXPECT_LT(op_norm(gamma(d).matrix() - CMatrix::Identity(2, 2)), 1e-15);
  for (int n = 2; n <= 6; ++n) {
    const CMatrix expected = std::polar(1.0, 2.0 * kPi / n) * CMatrix::Identity(n, n);
    EXPECT_LT(op_norm(gamma(voiculescu_pair(n)).matrix() - expected), 1e-12) << "n = " << n;
  }
}

TEST(Gamma, NormIdentityAndUnitDeterminant) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const UnitaryPair p = fixture::random_pair(1 + seed % 6, seed);
    const CMatrix g = gamma(p).matrix();
    EXPECT_NEAR(commutator_norm(p), op_norm(g - CMatrix::Identity(p.dim(), p.dim())), 1e-10);
    EXPECT_LT(std::abs(determinant(g) - 1.0), 1e-10);
  }
}

TEST(Logarithm, ReferenceValues) {
  EXPECT_EQ(op_norm(principal_log(UnitaryMatrix::identity(2)).matrix()), 0.0);
  CMatrix i1(1, 1);
  i1(0, 0) = Complex(0, 1);
  EXPECT_LT(std::abs(principal_log(UnitaryMatrix(i1)).matrix()(0, 0) - Complex(0, kPi / 2)), 1e-15);
  EXPECT_ERROR_CODE(principal_log(UnitaryMatrix(-CMatrix::Identity(2, 2))), ErrorCode::SpectrumContainsMinusOne);
  const SkewHermitianMatrix h = skew_log(UnitaryMatrix(-CMatrix::Identity(2, 2)));
  EXPECT_LT(op_norm(exp_skew(h).matrix() + CMatrix::Identity(2, 2)), 1e-14);
}

TEST(Logarithm, ExpInvertsLogAwayFromBranchCut) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 6;
    const UnitaryMatrix q = random_unitary(n, rng);
    CVector ph(n);
    for (Index i = 0; i < n; ++i) ph(i) = std::polar(1.0, (2.0 * rng.uniform() - 1.0) * (kPi - 0.01));
    const UnitaryMatrix u(q.matrix() * ph.asDiagonal() * q.matrix().adjoint());
    const SkewHermitianMatrix h = principal_log(u);
    EXPECT_LT(op_norm(h.matrix() + h.matrix().adjoint()), 1e-12);
    EXPECT_LT(op_norm(exp_skew(h).matrix() - u.matrix()), 1e-9);
  }
}

TEST(Exponential, ReferenceValuesAndChordLength) {
  EXPECT_LT(op_norm(exp_skew(SkewHermitianMatrix::zero(3)).matrix() - CMatrix::Identity(3, 3)), 1e-15);
  CMatrix h1(1, 1);
  h1(0, 0) = Complex(0, kPi / 2);
  EXPECT_LT(std::abs(exp_skew(SkewHermitianMatrix(h1)).matrix()(0, 0) - Complex(0, 1)), 1e-15);
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 6;
    const double bound = kPi * rng.uniform();
    const SkewHermitianMatrix h = random_skew(n, rng, bound);
    const double hn = op_norm(h.matrix());
    EXPECT_NEAR(op_norm(CMatrix::Identity(n, n) - exp_skew(h).matrix()), 2.0 * std::sin(hn / 2.0), 1e-10);
    EXPECT_LT(op_norm(exp_skew(h).matrix() - oracle::taylor_exp(h.matrix())), 1e-12);
  }
}

TEST(SkewFlow, GroupLaw) {
  const SkewHermitianMatrix h = random_skew(4, 10, 1.3);
  const SkewFlow flow(h);
  EXPECT_NEAR(flow.norm(), 1.3 * (1 - 8 * 2.220446049250313e-16), 1e-12);
  EXPECT_LT(op_norm((flow.at(0.3) * flow.at(0.5)).matrix() - flow.at(0.8).matrix()), 1e-13);
  EXPECT_LT(op_norm(flow.at(0.0).matrix() - CMatrix::Identity(4, 4)), 1e-14);
}

TEST(DFunction, ReferenceValuesAndInverse) {
  EXPECT_EQ(d_func(0.0), 0.0);
  EXPECT_DOUBLE_EQ(d_func(kPi), 2.0);
  EXPECT_NEAR(d_inv(std::sqrt(3.0)), 2.0 * kPi / 3.0, 1e-15);
  for (int i = 0; i <= 1000; ++i) {
    const double x = kPi * i / 1000.0;
    EXPECT_NEAR(d_inv(d_func(x)), x, 1e-12 + (x > kPi - 1e-3 ? 1e-7 : 0.0)) << x;
    EXPECT_NEAR(d_func(x), oracle::chord(x), 1e-15);
  }
  EXPECT_ERROR_CODE(d_func(-0.1), ErrorCode::DomainError);
  EXPECT_ERROR_CODE(d_func(4.0), ErrorCode::DomainError);
  EXPECT_ERROR_CODE(d_inv(2.1), ErrorCode::DomainError);
}

TEST(DFunction, InverseIsTightInTheInterior) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = (kPi - 0.01) * i / 1000.0;
    EXPECT_NEAR(d_inv(d_func(x)), x, 1e-12);
  }
}

TEST(UnitaryAngles, Conventions) {
  const auto a = unitary_angles(UnitaryMatrix::identity(2));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], 0.0);
  EXPECT_EQ(a[1], 0.0);
  const auto w = unitary_angles(UnitaryMatrix(std::polar(1.0, 2.0 * kPi / 3.0) * CMatrix::Identity(3, 3)));
  for (double x : w) EXPECT_NEAR(x, 2.0 * kPi / 3.0, 1e-14);
  const auto f = unitary_angles(UnitaryMatrix(diag2(1.0, -1.0)));
  EXPECT_EQ(f[0], 0.0);
  EXPECT_EQ(f[1], kPi);
  EXPECT_EQ(wrap_angle(-kPi, 1e-6), kPi);
  EXPECT_EQ(wrap_angle(-kPi + 1e-8, 1e-6), kPi);
  EXPECT_NEAR(wrap_angle(3.0 * kPi / 2.0, 1e-6), -kPi / 2.0, 1e-15);
}

TEST(Random, UnitaryAndDeterministic) {
  const UnitaryMatrix u = random_unitary(3, 42);
  EXPECT_LT(op_norm(u.matrix().adjoint() * u.matrix() - CMatrix::Identity(3, 3)), 1e-12);
  EXPECT_EQ(u.matrix(), random_unitary(3, 42).matrix());
  EXPECT_NE(u.matrix(), random_unitary(3, 43).matrix());
  const SkewHermitianMatrix h = random_skew(4, 7, 0.5);
  EXPECT_LE(op_norm(h.matrix()), 0.5);
  EXPECT_LT(op_norm(h.matrix() + h.matrix().adjoint()), 1e-15);
}

TEST(Random, FrozenStream) {
  // Pinned so any change to the generator or its derivations is visible.
  Rng rng(5489);
  for (int i = 1; i < 10000; ++i) rng.next();
  EXPECT_EQ(rng.next(), 9981545732273789042ull);
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

TEST(Random, NormalMoments) {
  Rng rng(11);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(Types, ValidationErrors) {
  EXPECT_ERROR_CODE(UnitaryMatrix(2.0 * CMatrix::Identity(2, 2)), ErrorCode::NotUnitary);
  EXPECT_ERROR_CODE(UnitaryMatrix(CMatrix::Identity(2, 3)), ErrorCode::DimensionMismatch);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 1) = std::nan("");
  EXPECT_ERROR_CODE(UnitaryMatrix(nan), ErrorCode::InvalidArgument);
  EXPECT_ERROR_CODE(SkewHermitianMatrix(CMatrix::Identity(2, 2)), ErrorCode::NotSkewHermitian);
  EXPECT_ERROR_CODE(UnitaryPair(UnitaryMatrix::identity(2), UnitaryMatrix::identity(3)), ErrorCode::DimensionMismatch);
  Tolerances t;
  t.zero = 0.0;
  EXPECT_ERROR_CODE(t.validate(), ErrorCode::InvalidArgument);
  EXPECT_NO_THROW(Tolerances{}.validate());
}

TEST(Types, UnitarityToleranceIsHonoured) {
  CMatrix near = CMatrix::Identity(2, 2);
  near(0, 0) = 1.0 + 1e-12;
  EXPECT_NO_THROW(UnitaryMatrix(near, 1e-10));
  near(0, 0) = 1.0 + 1e-6;
  EXPECT_ERROR_CODE(UnitaryMatrix(near, 1e-10), ErrorCode::NotUnitary);
  EXPECT_NO_THROW(UnitaryMatrix(near, 1e-5));
}

TEST(Types, DirectSumAndConjugation) {
  const UnitaryPair a = fixture::random_pair(2, 1);
  const UnitaryPair b = fixture::random_pair(3, 2);
  const UnitaryPair s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), 5);
  EXPECT_EQ(s.u().matrix().topLeftCorner(2, 2), a.u().matrix());
  EXPECT_EQ(s.v().matrix().bottomRightCorner(3, 3), b.v().matrix());
  EXPECT_EQ(s.u().matrix().topRightCorner(2, 3), CMatrix::Zero(2, 3));
  EXPECT_NEAR(commutator_norm(s), std::max(commutator_norm(a), commutator_norm(b)), 1e-12);
  const UnitaryPair c = conjugate(s, random_unitary(5, 3));
  EXPECT_NEAR(commutator_norm(c), commutator_norm(s), 1e-12);
}

TEST(JsonIo, RoundTrip) {
  const UnitaryPair p = fixture::random_pair(3, 12);
  const auto j = io::to_json(p);
  const UnitaryPair q = io::pair_from_json(j);
  EXPECT_EQ(p.u().matrix(), q.u().matrix());
  EXPECT_EQ(p.v().matrix(), q.v().matrix());
  const auto parsed = io::json::parse(j.dump());
  EXPECT_EQ(io::pair_from_json(parsed).v().matrix(), p.v().matrix());
}

TEST(JsonIo, RejectsMalformedMatrices) {
  using io::json;
  EXPECT_ERROR_CODE(io::matrix_from_json(json::array()), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(io::matrix_from_json(json{{"dim", 2}, {"data", json::array({1, 0, 0})}}), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(io::matrix_from_json(json{{"dim", 0}, {"data", json::array()}}), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(io::matrix_from_json(json{{"dim", 1}, {"data", json::array({"x"})}}), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(io::matrix_from_json(json{{"dim", 1}, {"data", json::array({json::array({1, 2, 3})})}}),
                    ErrorCode::ParseError);
  EXPECT_ERROR_CODE(io::pair_from_json(json{{"u", 1}}), ErrorCode::ParseError);
  const CMatrix real = io::matrix_from_json(json{{"dim", 1}, {"data", json::array({0.5})}});
  EXPECT_EQ(real(0, 0), Complex(0.5, 0.0));
}

TEST(Errors, NamesAreStable) {
  EXPECT_EQ(to_string(ErrorCode::NotScalarCommutator), "NotScalarCommutator");
  EXPECT_EQ(to_string(ErrorCode::RankAmbiguous), "RankAmbiguous");
  EXPECT_EQ(to_string(ErrorCode::ParseError), "ParseError");
  const Error e(ErrorCode::NoDecrease, "x");
  EXPECT_EQ(e.name(), "NoDecrease");
}

}  // namespace
