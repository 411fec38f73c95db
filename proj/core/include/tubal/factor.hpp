#pragma once

#include <tubal/tensor.hpp>

#include <optional>

namespace tubal {

// x = q * r with q: n1 x p x n3 having orthonormal lateral slices
// (q^T * q = I) and every Fourier slice of r upper triangular,
// p = min(n1, n2).
struct TqrFactors {
  Tensor3 q;
  Tensor3 r;
};

// x ~ u * s * v^T. Fourier slices of s are diagonal, nonnegative and sorted
// descending; the spatial s is tube-diagonal only. rank() is the number of
// lateral slices kept in u and v.
struct TsvdFactors {
  Tensor3 u;
  Tensor3 s;
  Tensor3 v;

  Index rank() const { return u.n2(); }
};

TqrFactors tqr(const Tensor3& x);

// Economy T-SVD with rank min(n1, n2).
TsvdFactors tsvd(const Tensor3& x);

// Keeps the first `rank` singular tubes. Throws RankError unless
// 1 <= rank <= f.rank().
TsvdFactors truncate_tsvd(const TsvdFactors& f, Index rank);

// u * s * v^T
Tensor3 reconstruct(const TsvdFactors& f);

// Singular values of every Fourier slice of x, as a min(n1, n2) x n3 matrix
// (column k holds slice k, descending).
Matrix fourier_singular_values(const Tensor3& x);

// Diagonals of the Fourier slices of f.s, as a rank x n3 matrix.
Matrix fourier_singular_values(const TsvdFactors& f);

// Moore-Penrose inverse under the t-product (n2 x n1 x n3).
Tensor3 pinv(const Tensor3& x);

// Number of singular tubes whose largest Fourier singular value exceeds tol.
// The default tolerance is max(n1, n2) * eps * (largest Fourier singular value).
Index tubal_rank(const Tensor3& x, std::optional<double> tol = std::nullopt);

}  // namespace tubal
