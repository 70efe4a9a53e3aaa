#pragma once

#include <functional>

#include "opineq/matrix.hpp"

namespace opineq {

using ScalarFn = std::function<double(double)>;

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
// Converges when the off-diagonal Frobenius norm drops below
// 1e-14 * ||X||_F; capped at 100 sweeps (NonConvergence beyond that).
// Eigenvalues are sorted ascending, ties broken by original index, so the
// result is deterministic for a fixed input.
SpectralDecomposition eigen_sym(const SymMatrix& x);

// Q f(Lambda) Q^T. Throws DomainViolation if f maps any eigenvalue to a
// non-finite value.
SymMatrix apply_scalar_fn(const SymMatrix& x, const ScalarFn& f);
SymMatrix apply_scalar_fn(const SpectralDecomposition& d, const ScalarFn& f);

// Fixed-function conveniences over the same spectral route.
SymMatrix spd_sqrt(const SpdMatrix& a);
SymMatrix spd_inv_sqrt(const SpdMatrix& a);
SymMatrix mat_power(const SymMatrix& x, double p);
SymMatrix mat_log(const SymMatrix& x);
SymMatrix mat_exp(const SymMatrix& x);
// Spectral absolute value |X| = (X^2)^{1/2}.
SymMatrix mat_abs(const SymMatrix& x);

// A^{1/2} M A^{1/2} given the square root factor; symmetrizes the result.
SymMatrix congruence(const SymMatrix& a_half, const SymMatrix& m);

// A^{-1/2} B A^{-1/2}; SPD for SPD inputs, so returned with its
// decomposition attached.
SpdMatrix contraction(const SpdMatrix& a, const SpdMatrix& b);

// Loewner comparison X <= Y: margin is the min eigenvalue of Y - X and the
// scale is max(||X||_F, ||Y||_F); passes iff margin >= -tol_rel * scale.
LoewnerMargin loewner_cmp(const SymMatrix& x, const SymMatrix& y, double tol_rel);

} // namespace opineq
