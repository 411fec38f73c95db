#pragma once

// Spatial-domain reference implementations built on explicit block-circulant
// matrices. Slow by construction; used to validate the Fourier-domain code.

#include <tubal/tensor.hpp>

namespace tubal::oracle {

// Largest n1*n3 (and n2*n3) accepted by the dense paths.
inline constexpr Index kMaxBcircExtent = 2000;

struct BcircMatrix {
  Matrix m;  // (n1*n3) x (n2*n3)
  Index n1 = 0;
  Index n2 = 0;
  Index n3 = 0;
};

// Block (r, c) is frontal slice (r - c) mod n3.
BcircMatrix bcirc(const Tensor3& x);

// Frontal slices stacked vertically: (n1*n3) x n2.
Matrix unfold(const Tensor3& x);

// Inverse of unfold. Throws DimensionError if m.rows() != n1 * n3.
Tensor3 fold(const Matrix& m, Index n1, Index n3);

// fold(bcirc(x) * unfold(y))
Tensor3 reference_tprod(const Tensor3& x, const Tensor3& y);

// Eigenvalues of bcirc(x) for square frontal slices.
Eigen::VectorXcd t_eigenvalues(const Tensor3& x);

// Largest singular value of bcirc(x).
double reference_spectral_norm(const Tensor3& x);

// (F ⊗ I_n1) bcirc(x) (F^* ⊗ I_n2) / n3 with F the unnormalized n3-point DFT
// matrix. Block diagonal, block k being Fourier slice k of x.
Eigen::MatrixXcd block_diagonalize(const Tensor3& x);

}  // namespace tubal::oracle
