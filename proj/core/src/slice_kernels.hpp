#pragma once

// Dense kernels applied to one Fourier slice at a time. A slice that is its
// own conjugate (k = 0, and k = n3/2 for even n3) holds a real matrix; those
// are factorized in real arithmetic so the spatial factors stay real.

#include <tubal/fourier.hpp>

namespace tubal::detail {

struct SliceQr {
  ComplexMatrix q;  // m x min(m, n), orthonormal columns
  ComplexMatrix r;  // min(m, n) x n, upper triangular
};

struct SliceSvd {
  ComplexMatrix u;         // m x min(m, n)
  Eigen::VectorXd sigma;   // descending
  ComplexMatrix v;         // n x min(m, n)
};

SliceQr qr_slice(const ComplexMatrix& a, bool real_slice);

// Orthonormal basis of range(a) with min(m, n) columns (the Q of a thin QR).
ComplexMatrix orthonormal_basis(const ComplexMatrix& a, bool real_slice);

// Thin SVD. Throws NumericalError tagged with slice_index on failure.
SliceSvd svd_slice(const ComplexMatrix& a, bool real_slice, Index slice_index);

}  // namespace tubal::detail
