#include <tubal/sketch.hpp>

#include <tubal/errors.hpp>
#include <tubal/fourier.hpp>
#include <tubal/parallel.hpp>
#include <tubal/random.hpp>

#include "slice_kernels.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace tubal {

namespace {

struct SliceOutcome {
  ComplexMatrix u;  // n1 x R
  Eigen::VectorXd sigma;
  ComplexMatrix v;  // n2 x R
  Index basis_width = 0;
  bool capped = false;
};

// Projects x onto range(q), factorizes the small tensor and lifts the left
// factor back: the shared tail of both randomized algorithms.
SliceOutcome project_and_truncate(const ComplexMatrix& x, const ComplexMatrix& q, Index rank,
                                  bool real_slice, Index slice_index) {
  const ComplexMatrix c = q.adjoint() * x;
  auto svd = detail::svd_slice(c, real_slice, slice_index);
  SliceOutcome out;
  out.u = q * svd.u.leftCols(rank);
  out.sigma = svd.sigma.head(rank);
  out.v = svd.v.leftCols(rank);
  out.basis_width = q.cols();
  return out;
}

ComplexMatrix krylov_blocks(const ComplexMatrix& x, const ComplexMatrix& b, Index depth) {
  const Index width = b.cols();
  ComplexMatrix k(x.rows(), (depth + 1) * width);
  ComplexMatrix block = x * b;
  k.leftCols(width) = block;
  for (Index i = 1; i <= depth; ++i) {
    const ComplexMatrix tmp = x.adjoint() * block;
    block.noalias() = x * tmp;
    k.middleCols(i * width, width) = block;
  }
  return k;
}

template <typename SliceAlgorithm>
RandomizedTsvd run_on_slices(const Tensor3& x, const Tensor3& b, Index rank,
                             SliceAlgorithm&& algorithm) {
  const Index n3 = x.n3();
  const Index half = unique_slice_count(n3);
  const FourierTensor3 xf = dft_mode3(x);
  const FourierTensor3 bf = dft_mode3(b);
  std::vector<SliceOutcome> slices(static_cast<std::size_t>(half));
  parallel_for(half, [&](Index k) {
    const ComplexMatrix xs = xf.slice(k);
    const ComplexMatrix bs = bf.slice(k);
    slices[static_cast<std::size_t>(k)] = algorithm(xs, bs, is_self_conjugate_slice(k, n3), k);
  });

  FourierTensor3 uf(x.n1(), rank, n3);
  FourierTensor3 sf(rank, rank, n3);
  FourierTensor3 vf(x.n2(), rank, n3);
  RandomizedTsvd result;
  for (Index k = 0; k < half; ++k) {
    const auto& s = slices[static_cast<std::size_t>(k)];
    uf.slice(k) = s.u;
    sf.slice(k).diagonal() = s.sigma.cast<Complex>();
    vf.slice(k) = s.v;
    result.basis_width = std::max(result.basis_width, s.basis_width);
    result.basis_capped = result.basis_capped || s.capped;
  }
  uf.mirror_conjugate_slices();
  sf.mirror_conjugate_slices();
  vf.mirror_conjugate_slices();
  result.factors = {idft_mode3(uf), idft_mode3(sf), idft_mode3(vf)};
  return result;
}

}  // namespace

void validate(const SketchParams& params, const Tensor3& x) {
  const Index limit = std::min(x.n1(), x.n2());
  if (params.rank < 1) throw RankError("target rank must be at least 1");
  if (params.oversample < 0) throw RankError("oversampling must be nonnegative");
  if (params.power < 0) throw RankError("power iteration depth must be nonnegative");
  if (params.sketch_width() > limit) {
    throw RankError("rank + oversampling = " + std::to_string(params.sketch_width()) +
                    " exceeds min(n1, n2) = " + std::to_string(limit));
  }
}

Tensor3 sketch_tensor(const Tensor3& x, const SketchParams& params) {
  return gaussian_tensor(x.n2(), params.sketch_width(), x.n3(), params.seed);
}

RandomizedTsvd randomized_tsvd_power(const Tensor3& x, const SketchParams& params) {
  validate(params, x);
  const Tensor3 b = sketch_tensor(x, params);
  return run_on_slices(x, b, params.rank,
                       [&](const ComplexMatrix& xs, const ComplexMatrix& bs, bool real_slice,
                           Index k) {
                         ComplexMatrix y = xs * bs;
                         for (Index i = 0; i < params.power; ++i) {
                           const ComplexMatrix tmp = xs.adjoint() * y;
                           y.noalias() = xs * tmp;
                         }
                         const ComplexMatrix q = detail::orthonormal_basis(y, real_slice);
                         return project_and_truncate(xs, q, params.rank, real_slice, k);
                       });
}

KrylovBasis build_krylov_basis(const Tensor3& x, const Tensor3& b, Index depth) {
  if (b.n1() != x.n2() || b.n3() != x.n3()) {
    throw DimensionError("sketch tensor must be n2 x w x n3 for an n1 x n2 x n3 input");
  }
  if (depth < 0) throw RankError("Krylov depth must be nonnegative");
  const Index n3 = x.n3();
  const Index width = (depth + 1) * b.n2();
  const FourierTensor3 xf = dft_mode3(x);
  const FourierTensor3 bf = dft_mode3(b);
  FourierTensor3 kf(x.n1(), width, n3);
  FourierTensor3 qf(x.n1(), std::min(x.n1(), width), n3);
  parallel_for(unique_slice_count(n3), [&](Index k) {
    const ComplexMatrix blocks = krylov_blocks(xf.slice(k), bf.slice(k), depth);
    kf.slice(k) = blocks;
    qf.slice(k) = detail::orthonormal_basis(blocks, is_self_conjugate_slice(k, n3));
  });
  kf.mirror_conjugate_slices();
  qf.mirror_conjugate_slices();
  return {idft_mode3(kf), idft_mode3(qf)};
}

RandomizedTsvd randomized_tsvd_block_krylov(const Tensor3& x, const SketchParams& params) {
  validate(params, x);
  const Tensor3 b = sketch_tensor(x, params);
  const Index cap = std::min(x.n1(), x.n2());
  return run_on_slices(
      x, b, params.rank,
      [&](const ComplexMatrix& xs, const ComplexMatrix& bs, bool real_slice, Index k) {
        const ComplexMatrix blocks = krylov_blocks(xs, bs, params.power);
        ComplexMatrix q = detail::orthonormal_basis(blocks, real_slice);
        bool capped = false;
        if (q.cols() > cap || blocks.cols() > cap) {
          capped = true;
          if (q.cols() > cap) q = q.leftCols(cap).eval();
        }
        if (params.truncation == BasisTruncation::leading && q.cols() > params.sketch_width()) {
          q = q.leftCols(params.sketch_width()).eval();
        }
        auto out = project_and_truncate(xs, q, params.rank, real_slice, k);
        out.capped = capped;
        return out;
      });
}

ResidualBound projector_residual_bound_check(const Tensor3& x, const SketchParams& params) {
  if (x.n1() * x.n3() > 200) {
    throw SizeError("residual bound check limited to n1 * n3 <= 200");
  }
  validate(params, x);
  const KrylovBasis basis = build_krylov_basis(x, sketch_tensor(x, params), params.power);
  const Tensor3 qt = t_transpose(basis.q);
  const Tensor3 residual = x - tprod(basis.q, tprod(qt, x));

  std::vector<Tensor3> blocks{x};
  const Tensor3 xxt = tprod(x, t_transpose(x));
  for (Index i = 1; i <= params.power; ++i) blocks.push_back(tprod(xxt, blocks.back()));
  const Tensor3 z = concat_lateral(blocks);

  const double exponent = 1.0 / static_cast<double>(2 * params.power + 1);
  return {spectral_norm(residual), std::pow(spectral_norm(z), exponent)};
}

}  // namespace tubal
