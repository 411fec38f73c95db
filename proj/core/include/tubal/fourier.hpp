#pragma once

#include <tubal/tensor.hpp>

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace tubal {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexRowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Relative size of the imaginary residue above which an inverse DFT is
// rejected as not coming from a real tensor.
inline constexpr double kSymmetryTolerance = 1e-6;

// A tensor after the DFT along mode 3. Layout mirrors Tensor3.
//
// When conjugate_symmetric() is set, slices k >= unique_slice_count(n3)
// equal conj(slice(n3 - k)), which is what the DFT of a real tensor gives.
class FourierTensor3 {
 public:
  using SliceView = Eigen::Map<const ComplexRowMajorMatrix>;
  using SliceRef = Eigen::Map<ComplexRowMajorMatrix>;

  FourierTensor3() = default;
  FourierTensor3(Index n1, Index n2, Index n3, bool conjugate_symmetric = true);

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  Index n3() const { return n3_; }
  bool conjugate_symmetric() const { return symmetric_; }
  void set_conjugate_symmetric(bool value) { symmetric_ = value; }

  Complex operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }
  Complex& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  SliceView slice(Index k) const { return SliceView(data_.data() + k * n1_ * n2_, n1_, n2_); }
  SliceRef slice(Index k) { return SliceRef(data_.data() + k * n1_ * n2_, n1_, n2_); }

  // Overwrites slices past the unique half with conjugates of their mirrors.
  void mirror_conjugate_slices();

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((k * n1_ + i) * n2_ + j);
  }

  Index n1_ = 0;
  Index n2_ = 0;
  Index n3_ = 0;
  bool symmetric_ = true;
  std::vector<Complex> data_;
};

// Number of Fourier slices that carry independent information for a real
// tensor: ceil((n3 + 1) / 2).
constexpr Index unique_slice_count(Index n3) { return n3 / 2 + 1; }

// Slice k of a real tensor's spectrum is its own conjugate (so it is real).
constexpr bool is_self_conjugate_slice(Index k, Index n3) { return k == 0 || 2 * k == n3; }

// Unnormalized forward DFT of every tube x(i, j, :).
FourierTensor3 dft_mode3(const Tensor3& x);

// Inverse DFT (1/n3 scaling). The imaginary part is dropped; if its
// Frobenius norm exceeds kSymmetryTolerance * ||real part||_F a
// SymmetryError is thrown.
Tensor3 idft_mode3(const FourierTensor3& xf);

// Per-slice matrix function. Receives the slice and its zero-based index.
using SliceFunction = std::function<ComplexMatrix(const ComplexMatrix&, Index)>;

// Applies f to the unique slices only and fills the rest by conjugate
// symmetry. f must commute with conjugation, which holds for every real
// algebraic slice operation used in this library.
FourierTensor3 map_fourier_slices(const FourierTensor3& xf, const SliceFunction& f);

// Slice-wise product in the Fourier domain; both operands must be
// conjugate-symmetric spectra.
FourierTensor3 fourier_product(const FourierTensor3& x, const FourierTensor3& y);

// t-product x * y for x: n1 x n2 x n3 and y: n2 x n4 x n3.
Tensor3 tprod(const Tensor3& x, const Tensor3& y);

}  // namespace tubal
