#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tubal {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SliceView = Eigen::Map<const RowMajorMatrix>;
using SliceRef = Eigen::Map<RowMajorMatrix>;

// Dense real n1 x n2 x n3 tensor.
//
// Entries are stored slice-major: frontal slice k is a contiguous row-major
// n1 x n2 block, slices follow each other for k = 0..n3-1. The same order is
// used by the binary tensor file format, so a write/read round trip is exact.
// Indices are zero-based throughout the C++ API.
class Tensor3 {
 public:
  Tensor3() = default;

  // Zero-filled tensor. Extents must be >= 1.
  Tensor3(Index n1, Index n2, Index n3);

  // Checked construction: length must equal n1*n2*n3 and every entry must be
  // finite.
  static Tensor3 from_data(Index n1, Index n2, Index n3, std::vector<double> data);

  // Stacks matrices as frontal slices.
  static Tensor3 from_slices(std::span<const Matrix> slices);

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  Index n3() const { return n3_; }
  Index size() const { return static_cast<Index>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }
  double& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  SliceView slice(Index k) const { return SliceView(data_.data() + k * n1_ * n2_, n1_, n2_); }
  SliceRef slice(Index k) { return SliceRef(data_.data() + k * n1_ * n2_, n1_, n2_); }

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(double alpha);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(double alpha, Tensor3 a) { return a *= alpha; }
  friend Tensor3 operator*(Tensor3 a, double alpha) { return a *= alpha; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.n3_ == b.n3_ && a.data_ == b.data_;
  }

  bool same_shape(const Tensor3& other) const {
    return n1_ == other.n1_ && n2_ == other.n2_ && n3_ == other.n3_;
  }

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((k * n1_ + i) * n2_ + j);
  }

  Index n1_ = 0;
  Index n2_ = 0;
  Index n3_ = 0;
  std::vector<double> data_;
};

// Same as Tensor3::from_data.
Tensor3 make_tensor(Index n1, Index n2, Index n3, std::vector<double> data);

// Copy of frontal slice k (zero-based). Throws IndexError when k is out of range.
Matrix frontal_slice(const Tensor3& x, Index k);

// Transposes every frontal slice and reverses the order of slices 2..n3, so
// that bcirc(t_transpose(x)) = bcirc(x)^T.
Tensor3 t_transpose(const Tensor3& x);

// First frontal slice is the n x n identity, the others are zero.
Tensor3 identity_tensor(Index n, Index n3);

// Lateral concatenation [x_1, x_2, ...]; parts must share n1 and n3.
Tensor3 concat_lateral(std::span<const Tensor3> parts);
Tensor3 concat_lateral(std::initializer_list<Tensor3> parts);

// x(:, first:first+count, :)
Tensor3 lateral_range(const Tensor3& x, Index first, Index count);

// x(0:rows, 0:cols, :)
Tensor3 leading_block(const Tensor3& x, Index rows, Index cols);

double fro_norm(const Tensor3& x);

// ||bcirc(x)||_2, evaluated as the largest 2-norm over the Fourier-domain
// frontal slices.
double spectral_norm(const Tensor3& x);

}  // namespace tubal
