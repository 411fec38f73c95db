#include <tubal/factor.hpp>

#include <tubal/errors.hpp>
#include <tubal/fourier.hpp>
#include <tubal/parallel.hpp>

#include "slice_kernels.hpp"

#include <limits>
#include <string>

namespace tubal {

TqrFactors tqr(const Tensor3& x) {
  const Index n3 = x.n3();
  const Index p = std::min(x.n1(), x.n2());
  const FourierTensor3 xf = dft_mode3(x);
  FourierTensor3 qf(x.n1(), p, n3);
  FourierTensor3 rf(p, x.n2(), n3);
  parallel_for(unique_slice_count(n3), [&](Index k) {
    auto f = detail::qr_slice(xf.slice(k), is_self_conjugate_slice(k, n3));
    qf.slice(k) = f.q;
    rf.slice(k) = f.r;
  });
  qf.mirror_conjugate_slices();
  rf.mirror_conjugate_slices();
  return {idft_mode3(qf), idft_mode3(rf)};
}

TsvdFactors tsvd(const Tensor3& x) {
  const Index n3 = x.n3();
  const Index p = std::min(x.n1(), x.n2());
  const FourierTensor3 xf = dft_mode3(x);
  FourierTensor3 uf(x.n1(), p, n3);
  FourierTensor3 sf(p, p, n3);
  FourierTensor3 vf(x.n2(), p, n3);
  parallel_for(unique_slice_count(n3), [&](Index k) {
    auto f = detail::svd_slice(xf.slice(k), is_self_conjugate_slice(k, n3), k);
    uf.slice(k) = f.u;
    sf.slice(k).diagonal() = f.sigma.cast<Complex>();
    vf.slice(k) = f.v;
  });
  uf.mirror_conjugate_slices();
  sf.mirror_conjugate_slices();
  vf.mirror_conjugate_slices();
  return {idft_mode3(uf), idft_mode3(sf), idft_mode3(vf)};
}

TsvdFactors truncate_tsvd(const TsvdFactors& f, Index rank) {
  if (rank < 1 || rank > f.rank()) {
    throw RankError("truncation rank " + std::to_string(rank) + " outside [1, " +
                    std::to_string(f.rank()) + "]");
  }
  if (rank == f.rank()) return f;
  return {lateral_range(f.u, 0, rank), leading_block(f.s, rank, rank),
          lateral_range(f.v, 0, rank)};
}

Tensor3 reconstruct(const TsvdFactors& f) {
  const FourierTensor3 us = fourier_product(dft_mode3(f.u), dft_mode3(f.s));
  const FourierTensor3 vf = dft_mode3(f.v);
  FourierTensor3 out(f.u.n1(), f.v.n1(), f.u.n3());
  parallel_for(unique_slice_count(f.u.n3()), [&](Index k) {
    out.slice(k).noalias() = us.slice(k) * vf.slice(k).adjoint();
  });
  out.mirror_conjugate_slices();
  return idft_mode3(out);
}

Matrix fourier_singular_values(const Tensor3& x) {
  const Index n3 = x.n3();
  const Index p = std::min(x.n1(), x.n2());
  const FourierTensor3 xf = dft_mode3(x);
  Matrix sigma(p, n3);
  parallel_for(unique_slice_count(n3), [&](Index k) {
    const ComplexMatrix s = xf.slice(k);
    if (is_self_conjugate_slice(k, n3)) {
      sigma.col(k) = Eigen::JacobiSVD<Matrix>(s.real()).singularValues();
    } else {
      sigma.col(k) = Eigen::JacobiSVD<ComplexMatrix>(s).singularValues();
    }
  });
  for (Index k = unique_slice_count(n3); k < n3; ++k) sigma.col(k) = sigma.col(n3 - k);
  return sigma;
}

Matrix fourier_singular_values(const TsvdFactors& f) {
  const FourierTensor3 sf = dft_mode3(f.s);
  Matrix sigma(f.rank(), f.s.n3());
  for (Index k = 0; k < f.s.n3(); ++k) sigma.col(k) = sf.slice(k).diagonal().real();
  return sigma;
}

Tensor3 pinv(const Tensor3& x) {
  const Index n3 = x.n3();
  const FourierTensor3 xf = dft_mode3(x);
  const Index half = unique_slice_count(n3);
  std::vector<detail::SliceSvd> svds(static_cast<std::size_t>(half));
  parallel_for(half, [&](Index k) {
    svds[static_cast<std::size_t>(k)] =
        detail::svd_slice(xf.slice(k), is_self_conjugate_slice(k, n3), k);
  });
  // One cutoff for all slices, so conjugate slices make identical decisions.
  double largest = 0.0;
  for (const auto& s : svds) {
    if (s.sigma.size() > 0) largest = std::max(largest, s.sigma(0));
  }
  const double cutoff = static_cast<double>(std::max(x.n1(), x.n2())) *
                        std::numeric_limits<double>::epsilon() * largest;
  FourierTensor3 out(x.n2(), x.n1(), n3);
  for (Index k = 0; k < half; ++k) {
    const auto& s = svds[static_cast<std::size_t>(k)];
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.sigma.size());
    for (Index m = 0; m < s.sigma.size(); ++m) {
      if (s.sigma(m) > cutoff) inv(m) = 1.0 / s.sigma(m);
    }
    out.slice(k).noalias() = s.v * inv.cast<Complex>().asDiagonal() * s.u.adjoint();
  }
  out.mirror_conjugate_slices();
  return idft_mode3(out);
}

Index tubal_rank(const Tensor3& x, std::optional<double> tol) {
  const Matrix sigma = fourier_singular_values(x);
  if (sigma.size() == 0) return 0;
  const Eigen::VectorXd tube_max = sigma.rowwise().maxCoeff();
  const double cutoff = tol.value_or(static_cast<double>(std::max(x.n1(), x.n2())) *
                                     std::numeric_limits<double>::epsilon() * tube_max.maxCoeff());
  Index rank = 0;
  for (Index m = 0; m < tube_max.size(); ++m) {
    if (tube_max(m) > cutoff) ++rank;
  }
  return rank;
}

}  // namespace tubal
