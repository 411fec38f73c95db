#include <tubal/errors.hpp>
#include <tubal/fourier.hpp>
#include <tubal/oracle.hpp>
#include <tubal/tensor.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace tubal {
namespace {

using testing::max_abs_diff;
using testing::random_tensor;

TEST(MakeTensor, SingletonHoldsValue) {
  const Tensor3 t = make_tensor(1, 1, 1, {7.0});
  EXPECT_EQ(t(0, 0, 0), 7.0);
}

TEST(MakeTensor, FirstSliceIsFirstFourValuesRowMajor) {
  const Tensor3 t = make_tensor(2, 2, 2, {1, 2, 3, 4, 5, 6, 7, 8});
  Matrix expected(2, 2);
  expected << 1, 2, 3, 4;
  EXPECT_EQ(frontal_slice(t, 0), expected);
  EXPECT_EQ(t(1, 0, 1), 7.0);
}

TEST(MakeTensor, RejectsWrongLength) {
  EXPECT_THROW(make_tensor(2, 3, 4, std::vector<double>(23, 0.0)), DimensionError);
}

TEST(MakeTensor, RejectsNonFinite) {
  EXPECT_THROW(make_tensor(1, 1, 2, {1.0, std::numeric_limits<double>::quiet_NaN()}), ValueError);
  EXPECT_THROW(make_tensor(1, 1, 1, {std::numeric_limits<double>::infinity()}), ValueError);
}

TEST(MakeTensor, RejectsZeroExtent) {
  EXPECT_THROW(make_tensor(0, 1, 1, {}), DimensionError);
}

TEST(FrontalSlice, IdentityTensorSlices) {
  const Tensor3 id = identity_tensor(2, 3);
  EXPECT_EQ(frontal_slice(id, 0), Matrix::Identity(2, 2));
  EXPECT_EQ(frontal_slice(id, 1), Matrix::Zero(2, 2));
  EXPECT_THROW(frontal_slice(id, 3), IndexError);
  EXPECT_THROW(frontal_slice(id, -1), IndexError);
}

TEST(TTranspose, SingleSliceIsMatrixTranspose) {
  const Tensor3 x = random_tensor(3, 5, 1, 1);
  EXPECT_EQ(frontal_slice(t_transpose(x), 0), Matrix(x.slice(0).transpose()));
}

TEST(TTranspose, ReversesTrailingSlices) {
  const Tensor3 x = random_tensor(3, 2, 4, 2);
  const Tensor3 y = t_transpose(x);
  ASSERT_EQ(y.n1(), 2);
  ASSERT_EQ(y.n2(), 3);
  EXPECT_EQ(frontal_slice(y, 0), Matrix(x.slice(0).transpose()));
  EXPECT_EQ(frontal_slice(y, 1), Matrix(x.slice(3).transpose()));
  EXPECT_EQ(frontal_slice(y, 2), Matrix(x.slice(2).transpose()));
  EXPECT_EQ(frontal_slice(y, 3), Matrix(x.slice(1).transpose()));
}

TEST(TTranspose, IsAnInvolution) {
  for (Index n3 : {1, 2, 3, 4, 7}) {
    const Tensor3 x = random_tensor(3, 2, n3, 10 + n3);
    EXPECT_EQ(t_transpose(t_transpose(x)), x);
  }
}

TEST(TTranspose, MatchesTransposedBcirc) {
  const Tensor3 x = random_tensor(3, 2, 4, 3);
  const Matrix lhs = oracle::bcirc(t_transpose(x)).m;
  const Matrix rhs = oracle::bcirc(x).m.transpose();
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TTranspose, ReversesProducts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Tensor3 x = random_tensor(4, 3, 5, 100 + seed);
    const Tensor3 y = random_tensor(3, 2, 5, 200 + seed);
    const Tensor3 lhs = t_transpose(tprod(x, y));
    const Tensor3 rhs = tprod(t_transpose(y), t_transpose(x));
    EXPECT_LT(max_abs_diff(lhs, rhs), 1e-10);
  }
}

TEST(IdentityTensor, SingleSliceIsIdentityMatrix) {
  const Tensor3 id = identity_tensor(2, 1);
  EXPECT_EQ(id.n3(), 1);
  EXPECT_EQ(frontal_slice(id, 0), Matrix::Identity(2, 2));
}

TEST(IdentityTensor, IsLeftIdentityOfTprod) {
  const Tensor3 x = random_tensor(3, 2, 4, 4);
  EXPECT_LT(max_abs_diff(tprod(identity_tensor(3, 4), x), x), 1e-14);
}

TEST(ConcatLateral, SinglePartIsUnchanged) {
  const Tensor3 x = random_tensor(2, 3, 2, 5);
  EXPECT_EQ(concat_lateral({x}), x);
}

TEST(ConcatLateral, PreservesArgumentOrder) {
  const Tensor3 a = make_tensor(2, 1, 3, {1, 2, 3, 4, 5, 6});
  const Tensor3 b = make_tensor(2, 1, 3, {10, 20, 30, 40, 50, 60});
  const Tensor3 c = concat_lateral({a, b});
  ASSERT_EQ(c.n2(), 2);
  for (Index k = 0; k < 3; ++k) {
    for (Index i = 0; i < 2; ++i) {
      EXPECT_EQ(c(i, 0, k), a(i, 0, k));
      EXPECT_EQ(c(i, 1, k), b(i, 0, k));
    }
  }
}

TEST(ConcatLateral, RejectsMismatchedExtents) {
  EXPECT_THROW(concat_lateral({Tensor3(2, 1, 3), Tensor3(2, 1, 4)}), DimensionError);
  EXPECT_THROW(concat_lateral({Tensor3(2, 1, 3), Tensor3(3, 1, 3)}), DimensionError);
}

TEST(ConcatLateral, SlicingRecoversPartsExactly) {
  const Tensor3 a = random_tensor(3, 2, 4, 6);
  const Tensor3 b = random_tensor(3, 5, 4, 7);
  const Tensor3 c = random_tensor(3, 1, 4, 8);
  const Tensor3 joined = concat_lateral({a, b, c});
  EXPECT_EQ(lateral_range(joined, 0, 2), a);
  EXPECT_EQ(lateral_range(joined, 2, 5), b);
  EXPECT_EQ(lateral_range(joined, 7, 1), c);
}

TEST(FroNorm, Examples) {
  Tensor3 ones(2, 2, 2);
  for (double& v : ones.data()) v = 1.0;
  EXPECT_DOUBLE_EQ(fro_norm(ones), std::sqrt(8.0));
  EXPECT_EQ(fro_norm(Tensor3(3, 2, 2)), 0.0);
}

TEST(FroNorm, MatchesFourierDomainFormula) {
  const Tensor3 x = random_tensor(3, 2, 4, 9);
  const FourierTensor3 xf = dft_mode3(x);
  double sum = 0.0;
  for (const Complex& v : xf.data()) sum += std::norm(v);
  const double fourier = std::sqrt(sum) / std::sqrt(4.0);
  EXPECT_NEAR(fro_norm(x), fourier, 1e-12 * fro_norm(x));
}

TEST(SpectralNorm, IdentityIsOne) {
  EXPECT_NEAR(spectral_norm(identity_tensor(3, 4)), 1.0, 1e-14);
}

TEST(SpectralNorm, ZeroTensorIsZero) { EXPECT_EQ(spectral_norm(Tensor3(2, 3, 4)), 0.0); }

TEST(SpectralNorm, MatchesBcircTwoNorm) {
  const Tensor3 x = random_tensor(3, 2, 4, 11);
  EXPECT_NEAR(spectral_norm(x), oracle::reference_spectral_norm(x), 1e-10);
}

TEST(SpectralNorm, IsSubmultiplicative) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tensor3 x = random_tensor(4, 3, 5, 300 + seed);
    const Tensor3 y = random_tensor(3, 6, 5, 400 + seed);
    EXPECT_LE(spectral_norm(tprod(x, y)), spectral_norm(x) * spectral_norm(y) * (1 + 1e-12));
  }
}

TEST(TensorArithmetic, ShapeMismatchThrows) {
  Tensor3 a(2, 2, 2);
  EXPECT_THROW(a += Tensor3(2, 2, 3), DimensionError);
}

}  // namespace
}  // namespace tubal
