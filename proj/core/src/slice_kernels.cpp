#include "slice_kernels.hpp"

#include <tubal/errors.hpp>

#include <string>

namespace tubal::detail {

namespace {

template <typename MatrixType>
std::pair<MatrixType, MatrixType> thin_qr(const MatrixType& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  const Index p = std::min(m, n);
  Eigen::HouseholderQR<MatrixType> qr(a);
  MatrixType q = qr.householderQ() * MatrixType::Identity(m, p);
  MatrixType r = qr.matrixQR().topRows(p).template triangularView<Eigen::Upper>();
  return {std::move(q), std::move(r)};
}

template <typename MatrixType>
void check_svd(const Eigen::BDCSVD<MatrixType>& svd, Index slice_index) {
  if (svd.info() != Eigen::Success || !svd.singularValues().allFinite()) {
    throw NumericalError("SVD failed on Fourier slice " + std::to_string(slice_index));
  }
}

}  // namespace

SliceQr qr_slice(const ComplexMatrix& a, bool real_slice) {
  if (real_slice) {
    auto [q, r] = thin_qr<Matrix>(a.real());
    return {q.cast<Complex>(), r.cast<Complex>()};
  }
  auto [q, r] = thin_qr<ComplexMatrix>(a);
  return {std::move(q), std::move(r)};
}

ComplexMatrix orthonormal_basis(const ComplexMatrix& a, bool real_slice) {
  const Index p = std::min(a.rows(), a.cols());
  if (real_slice) {
    Eigen::HouseholderQR<Matrix> qr(a.real());
    const Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), p);
    return q.cast<Complex>();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(a.rows(), p);
}

SliceSvd svd_slice(const ComplexMatrix& a, bool real_slice, Index slice_index) {
  if (real_slice) {
    Eigen::BDCSVD<Matrix> svd(a.real(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    check_svd(svd, slice_index);
    return {svd.matrixU().cast<Complex>(), svd.singularValues(), svd.matrixV().cast<Complex>()};
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  check_svd(svd, slice_index);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace tubal::detail
