#include <tubal/tensor.hpp>

#include <tubal/errors.hpp>
#include <tubal/fourier.hpp>

#include <cmath>
#include <string>

namespace tubal {

namespace {

void check_extents(Index n1, Index n2, Index n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) {
    throw DimensionError("tensor extents must be positive, got " + std::to_string(n1) + "x" +
                         std::to_string(n2) + "x" + std::to_string(n3));
  }
}

void check_same_shape(const Tensor3& a, const Tensor3& b) {
  if (!a.same_shape(b)) throw DimensionError("tensor shapes differ");
}

}  // namespace

Tensor3::Tensor3(Index n1, Index n2, Index n3) : n1_(n1), n2_(n2), n3_(n3) {
  check_extents(n1, n2, n3);
  data_.assign(static_cast<std::size_t>(n1 * n2 * n3), 0.0);
}

Tensor3 Tensor3::from_data(Index n1, Index n2, Index n3, std::vector<double> data) {
  check_extents(n1, n2, n3);
  if (static_cast<Index>(data.size()) != n1 * n2 * n3) {
    throw DimensionError("expected " + std::to_string(n1 * n2 * n3) + " values, got " +
                         std::to_string(data.size()));
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) {
      throw ValueError("non-finite entry at flat index " + std::to_string(i));
    }
  }
  Tensor3 t;
  t.n1_ = n1;
  t.n2_ = n2;
  t.n3_ = n3;
  t.data_ = std::move(data);
  return t;
}

Tensor3 Tensor3::from_slices(std::span<const Matrix> slices) {
  if (slices.empty()) throw DimensionError("no slices given");
  Tensor3 t(slices.front().rows(), slices.front().cols(), static_cast<Index>(slices.size()));
  for (Index k = 0; k < t.n3(); ++k) {
    const auto& s = slices[static_cast<std::size_t>(k)];
    if (s.rows() != t.n1() || s.cols() != t.n2()) {
      throw DimensionError("slice " + std::to_string(k) + " has mismatched extents");
    }
    t.slice(k) = s;
  }
  return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double alpha) {
  for (double& v : data_) v *= alpha;
  return *this;
}

Tensor3 make_tensor(Index n1, Index n2, Index n3, std::vector<double> data) {
  return Tensor3::from_data(n1, n2, n3, std::move(data));
}

Matrix frontal_slice(const Tensor3& x, Index k) {
  if (k < 0 || k >= x.n3()) {
    throw IndexError("frontal slice " + std::to_string(k) + " out of range [0, " +
                     std::to_string(x.n3()) + ")");
  }
  return x.slice(k);
}

Tensor3 t_transpose(const Tensor3& x) {
  Tensor3 y(x.n2(), x.n1(), x.n3());
  const Index n3 = x.n3();
  for (Index k = 0; k < n3; ++k) {
    const Index src = (k == 0) ? 0 : n3 - k;
    y.slice(k) = x.slice(src).transpose();
  }
  return y;
}

Tensor3 identity_tensor(Index n, Index n3) {
  Tensor3 t(n, n, n3);
  t.slice(0).setIdentity();
  return t;
}

Tensor3 concat_lateral(std::span<const Tensor3> parts) {
  if (parts.empty()) throw DimensionError("concat_lateral needs at least one part");
  const Index n1 = parts.front().n1();
  const Index n3 = parts.front().n3();
  Index n2 = 0;
  for (const auto& p : parts) {
    if (p.n1() != n1 || p.n3() != n3) {
      throw DimensionError("concat_lateral parts must share n1 and n3");
    }
    n2 += p.n2();
  }
  Tensor3 out(n1, n2, n3);
  for (Index k = 0; k < n3; ++k) {
    Index col = 0;
    for (const auto& p : parts) {
      out.slice(k).middleCols(col, p.n2()) = p.slice(k);
      col += p.n2();
    }
  }
  return out;
}

Tensor3 concat_lateral(std::initializer_list<Tensor3> parts) {
  return concat_lateral(std::span<const Tensor3>(parts.begin(), parts.size()));
}

Tensor3 lateral_range(const Tensor3& x, Index first, Index count) {
  if (first < 0 || count < 1 || first + count > x.n2()) {
    throw IndexError("lateral range out of bounds");
  }
  Tensor3 out(x.n1(), count, x.n3());
  for (Index k = 0; k < x.n3(); ++k) out.slice(k) = x.slice(k).middleCols(first, count);
  return out;
}

Tensor3 leading_block(const Tensor3& x, Index rows, Index cols) {
  if (rows < 1 || cols < 1 || rows > x.n1() || cols > x.n2()) {
    throw IndexError("leading block out of bounds");
  }
  Tensor3 out(rows, cols, x.n3());
  for (Index k = 0; k < x.n3(); ++k) out.slice(k) = x.slice(k).topLeftCorner(rows, cols);
  return out;
}

double fro_norm(const Tensor3& x) {
  // Fixed summation order, slice by slice.
  double sum = 0.0;
  for (Index k = 0; k < x.n3(); ++k) sum += x.slice(k).squaredNorm();
  return std::sqrt(sum);
}

double spectral_norm(const Tensor3& x) {
  if (x.empty()) return 0.0;
  const FourierTensor3 xf = dft_mode3(x);
  double best = 0.0;
  for (Index k = 0; k < unique_slice_count(x.n3()); ++k) {
    const ComplexMatrix s = xf.slice(k);
    Eigen::JacobiSVD<ComplexMatrix> svd(s);
    if (svd.singularValues().size() > 0) best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

}  // namespace tubal
