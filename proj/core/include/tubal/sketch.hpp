#pragma once

#include <tubal/factor.hpp>
#include <tubal/tensor.hpp>

#include <cstdint>

namespace tubal {

// How much of the orthonormalized Krylov basis enters the projection step.
enum class BasisTruncation {
  full,         // every column of Q (capped at min(n1, n2))
  leading,      // the first R + P lateral slices of Q
};

struct SketchParams {
  Index rank = 1;        // target tubal rank R
  Index oversample = 0;  // P
  Index power = 0;       // q: power-iteration / Krylov depth
  std::uint64_t seed = 0;
  BasisTruncation truncation = BasisTruncation::full;

  Index sketch_width() const { return rank + oversample; }
};

// Throws RankError unless R >= 1, P >= 0, q >= 0 and R + P <= min(n1, n2).
void validate(const SketchParams& params, const Tensor3& x);

// Lateral concatenation K = [K_0, ..., K_q] with K_i = (X X^T)^i X B, and the
// Q factor of its T-QR.
struct KrylovBasis {
  Tensor3 k;
  Tensor3 q;
};

struct RandomizedTsvd {
  TsvdFactors factors;
  Index basis_width = 0;     // lateral slices of the basis used for projection
  bool basis_capped = false; // (q+1)(R+P) exceeded min(n1, n2)
};

// Random test tensor used by both algorithms: n2 x (R+P) x n3 from `seed`.
Tensor3 sketch_tensor(const Tensor3& x, const SketchParams& params);

// Subspace iteration: orthonormalizes the last power iterate (X X^T)^q X B,
// projects, and truncates to rank R.
RandomizedTsvd randomized_tsvd_power(const Tensor3& x, const SketchParams& params);

KrylovBasis build_krylov_basis(const Tensor3& x, const Tensor3& b, Index depth);

// Block Krylov variant: orthonormalizes every iterate [X B, ..., (X X^T)^q X B]
// at once. No re-orthogonalization happens between blocks, so depths beyond
// about 4 lose accuracy on tensors with fast spectral decay.
RandomizedTsvd randomized_tsvd_block_krylov(const Tensor3& x, const SketchParams& params);

struct ResidualBound {
  double lhs;  // ||X - Q Q^T X||_2
  double rhs;  // ||Z||_2^(1/(2q+1)), Z = [X, (X X^T) X, ..., (X X^T)^q X]
};

// Evaluates both sides of the block Krylov residual bound for the full
// (untruncated) basis. Restricted to n1 * n3 <= 200; larger inputs raise
// SizeError.
ResidualBound projector_residual_bound_check(const Tensor3& x, const SketchParams& params);

}  // namespace tubal
