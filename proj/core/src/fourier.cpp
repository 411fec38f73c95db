#include <tubal/fourier.hpp>

#include <tubal/errors.hpp>
#include <tubal/parallel.hpp>

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <string>

namespace tubal {

FourierTensor3::FourierTensor3(Index n1, Index n2, Index n3, bool conjugate_symmetric)
    : n1_(n1), n2_(n2), n3_(n3), symmetric_(conjugate_symmetric) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw DimensionError("Fourier tensor extents must be positive");
  data_.assign(static_cast<std::size_t>(n1 * n2 * n3), Complex(0.0, 0.0));
}

void FourierTensor3::mirror_conjugate_slices() {
  for (Index k = unique_slice_count(n3_); k < n3_; ++k) {
    slice(k) = slice(n3_ - k).conjugate();
  }
  symmetric_ = true;
}

FourierTensor3 dft_mode3(const Tensor3& x) {
  FourierTensor3 out(x.n1(), x.n2(), x.n3());
  const Index n3 = x.n3();
  if (n3 == 1) {
    out.slice(0) = x.slice(0).cast<Complex>();
    return out;
  }
  parallel_for(x.n1(), [&](Index i) {
    Eigen::FFT<double> fft;
    std::vector<double> tube(static_cast<std::size_t>(n3));
    std::vector<Complex> spectrum;
    for (Index j = 0; j < x.n2(); ++j) {
      for (Index k = 0; k < n3; ++k) tube[static_cast<std::size_t>(k)] = x(i, j, k);
      fft.fwd(spectrum, tube);
      for (Index k = 0; k < n3; ++k) out(i, j, k) = spectrum[static_cast<std::size_t>(k)];
    }
  });
  // Exact symmetry for the slices that are determined by others.
  out.mirror_conjugate_slices();
  for (Index k = 0; k < unique_slice_count(n3); ++k) {
    if (is_self_conjugate_slice(k, n3)) out.slice(k) = out.slice(k).real().cast<Complex>();
  }
  return out;
}

Tensor3 idft_mode3(const FourierTensor3& xf) {
  Tensor3 out(xf.n1(), xf.n2(), xf.n3());
  const Index n3 = xf.n3();
  std::vector<double> residue_rows(static_cast<std::size_t>(xf.n1()), 0.0);
  parallel_for(xf.n1(), [&](Index i) {
    Eigen::FFT<double> fft;
    std::vector<Complex> spectrum(static_cast<std::size_t>(n3));
    std::vector<Complex> tube;
    double residue = 0.0;
    for (Index j = 0; j < xf.n2(); ++j) {
      for (Index k = 0; k < n3; ++k) spectrum[static_cast<std::size_t>(k)] = xf(i, j, k);
      if (n3 == 1) {
        tube = spectrum;
      } else {
        fft.inv(tube, spectrum);
      }
      for (Index k = 0; k < n3; ++k) {
        const Complex v = tube[static_cast<std::size_t>(k)];
        out(i, j, k) = v.real();
        residue += v.imag() * v.imag();
      }
    }
    residue_rows[static_cast<std::size_t>(i)] = residue;
  });
  double residue = 0.0;
  for (double r : residue_rows) residue += r;
  residue = std::sqrt(residue);
  const double norm = fro_norm(out);
  if (residue > kSymmetryTolerance * norm) {
    throw SymmetryError("inverse DFT left an imaginary residue of " + std::to_string(residue) +
                        " against a real part of norm " + std::to_string(norm));
  }
  return out;
}

FourierTensor3 map_fourier_slices(const FourierTensor3& xf, const SliceFunction& f) {
  const Index n3 = xf.n3();
  const Index half = unique_slice_count(n3);
  std::vector<ComplexMatrix> results(static_cast<std::size_t>(half));
  parallel_for(half, [&](Index k) {
    const ComplexMatrix s = xf.slice(k);
    results[static_cast<std::size_t>(k)] = f(s, k);
  });
  const Index rows = results.front().rows();
  const Index cols = results.front().cols();
  for (Index k = 1; k < half; ++k) {
    const auto& r = results[static_cast<std::size_t>(k)];
    if (r.rows() != rows || r.cols() != cols) {
      throw DimensionError("slice function returned inconsistent extents at slice " +
                           std::to_string(k));
    }
  }
  FourierTensor3 out(rows, cols, n3);
  for (Index k = 0; k < half; ++k) out.slice(k) = results[static_cast<std::size_t>(k)];
  out.mirror_conjugate_slices();
  return out;
}

FourierTensor3 fourier_product(const FourierTensor3& x, const FourierTensor3& y) {
  if (x.n2() != y.n1() || x.n3() != y.n3()) {
    throw DimensionError("t-product extents " + std::to_string(x.n1()) + "x" +
                         std::to_string(x.n2()) + "x" + std::to_string(x.n3()) + " and " +
                         std::to_string(y.n1()) + "x" + std::to_string(y.n2()) + "x" +
                         std::to_string(y.n3()) + " do not conform");
  }
  FourierTensor3 out(x.n1(), y.n2(), x.n3());
  parallel_for(unique_slice_count(x.n3()), [&](Index k) {
    out.slice(k).noalias() = x.slice(k) * y.slice(k);
  });
  out.mirror_conjugate_slices();
  return out;
}

Tensor3 tprod(const Tensor3& x, const Tensor3& y) {
  if (x.n2() != y.n1() || x.n3() != y.n3()) {
    throw DimensionError("t-product extents " + std::to_string(x.n1()) + "x" +
                         std::to_string(x.n2()) + "x" + std::to_string(x.n3()) + " and " +
                         std::to_string(y.n1()) + "x" + std::to_string(y.n2()) + "x" +
                         std::to_string(y.n3()) + " do not conform");
  }
  if (x.n3() == 1) {
    Tensor3 out(x.n1(), y.n2(), 1);
    out.slice(0).noalias() = x.slice(0) * y.slice(0);
    return out;
  }
  return idft_mode3(fourier_product(dft_mode3(x), dft_mode3(y)));
}

}  // namespace tubal
