#include <tubal/oracle.hpp>

#include <tubal/errors.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace tubal::oracle {

namespace {

void guard(const Tensor3& x) {
  if (x.n1() * x.n3() > kMaxBcircExtent || x.n2() * x.n3() > kMaxBcircExtent) {
    throw SizeError("block-circulant matrix of " + std::to_string(x.n1() * x.n3()) + "x" +
                    std::to_string(x.n2() * x.n3()) + " exceeds the oracle limit");
  }
}

Eigen::MatrixXcd dft_matrix(Index n) {
  Eigen::MatrixXcd f(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((r * c) % n) /
                           static_cast<double>(n);
      f(r, c) = std::polar(1.0, angle);
    }
  }
  return f;
}

Eigen::MatrixXcd kron_identity(const Eigen::MatrixXcd& f, Index n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(f.rows() * n, f.cols() * n);
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) {
      out.block(r * n, c * n, n, n) = f(r, c) * Eigen::MatrixXcd::Identity(n, n);
    }
  }
  return out;
}

}  // namespace

BcircMatrix bcirc(const Tensor3& x) {
  guard(x);
  const Index n1 = x.n1();
  const Index n2 = x.n2();
  const Index n3 = x.n3();
  BcircMatrix out{Matrix(n1 * n3, n2 * n3), n1, n2, n3};
  for (Index r = 0; r < n3; ++r) {
    for (Index c = 0; c < n3; ++c) {
      out.m.block(r * n1, c * n2, n1, n2) = x.slice(((r - c) % n3 + n3) % n3);
    }
  }
  return out;
}

Matrix unfold(const Tensor3& x) {
  Matrix out(x.n1() * x.n3(), x.n2());
  for (Index k = 0; k < x.n3(); ++k) out.middleRows(k * x.n1(), x.n1()) = x.slice(k);
  return out;
}

Tensor3 fold(const Matrix& m, Index n1, Index n3) {
  if (n1 < 1 || n3 < 1 || m.rows() != n1 * n3) {
    throw DimensionError("cannot fold " + std::to_string(m.rows()) + " rows into " +
                         std::to_string(n3) + " slices of " + std::to_string(n1) + " rows");
  }
  Tensor3 out(n1, m.cols(), n3);
  for (Index k = 0; k < n3; ++k) out.slice(k) = m.middleRows(k * n1, n1);
  return out;
}

Tensor3 reference_tprod(const Tensor3& x, const Tensor3& y) {
  if (x.n2() != y.n1() || x.n3() != y.n3()) {
    throw DimensionError("t-product operands do not conform");
  }
  guard(x);
  guard(y);
  return fold(bcirc(x).m * unfold(y), x.n1(), x.n3());
}

Eigen::VectorXcd t_eigenvalues(const Tensor3& x) {
  if (x.n1() != x.n2()) throw DimensionError("T-eigenvalues need square frontal slices");
  return Eigen::EigenSolver<Matrix>(bcirc(x).m, false).eigenvalues();
}

double reference_spectral_norm(const Tensor3& x) {
  const Matrix m = bcirc(x).m;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  return sv.size() > 0 ? sv(0) : 0.0;
}

Eigen::MatrixXcd block_diagonalize(const Tensor3& x) {
  const Eigen::MatrixXcd f = dft_matrix(x.n3());
  const Eigen::MatrixXcd left = kron_identity(f, x.n1());
  const Eigen::MatrixXcd right = kron_identity(f.adjoint(), x.n2());
  return left * bcirc(x).m.cast<std::complex<double>>() * right /
         static_cast<double>(x.n3());
}

}  // namespace tubal::oracle
