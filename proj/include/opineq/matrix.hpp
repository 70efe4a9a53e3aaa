#pragma once

#include <cstddef>
#include <vector>

#include "opineq/errors.hpp"

namespace opineq {

// Jacobi eigensolver limit; everything in this library runs through it.
inline constexpr int kMaxDim = 64;

// Dense real symmetric matrix, row-major, symmetrized on construction.
class SymMatrix {
  public:
    explicit SymMatrix(int dim);
    // Builds from dim*dim row-major entries; stores (X + X^T)/2.
    SymMatrix(int dim, const std::vector<double>& entries);

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(const std::vector<double>& diag);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    // Writes entry (i,j) and its mirror (j,i).
    void set(int i, int j, double value);

    const std::vector<double>& data() const { return data_; }

    SymMatrix& operator+=(const SymMatrix& other);
    SymMatrix& operator-=(const SymMatrix& other);
    SymMatrix& operator*=(double scalar);

    friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) { return lhs += rhs; }
    friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) { return lhs -= rhs; }
    friend SymMatrix operator*(double scalar, SymMatrix m) { return m *= scalar; }

    double frobenius_norm() const;
    double max_abs_entry() const;

  private:
    int dim_;
    std::vector<double> data_;
};

// Eigenvalues ascending, eigenvectors as columns of an orthogonal Q.
struct SpectralDecomposition {
    int dim = 0;
    std::vector<double> eigenvalues;  // nondecreasing
    std::vector<double> q;            // row-major, column j = eigenvector j

    double q_at(int i, int j) const { return q[static_cast<size_t>(i) * dim + j]; }

    // Q f(Lambda) Q^T for a scalar function given as mapped eigenvalues.
    SymMatrix assemble(const std::vector<double>& mapped) const;
    SymMatrix reconstruct() const;
};

// Certificate for X <= Y in the Loewner order.
//   margin = min eigenvalue of (Y - X); passes iff margin >= -tol_rel * scale.
struct LoewnerMargin {
    double margin = 0.0;
    double scale = 0.0;  // max Frobenius norm of the two operands
    bool passed = false;
};

// Symmetric positive definite matrix. Construction eigendecomposes and
// rejects inputs whose min eigenvalue does not exceed 1e-12 * max eigenvalue
// (inverse square roots amplify near-singularity). The decomposition is
// cached so every matrix function of the same operand shares it.
class SpdMatrix {
  public:
    explicit SpdMatrix(SymMatrix m);

    int dim() const { return sym_.dim(); }
    const SymMatrix& sym() const { return sym_; }
    const SpectralDecomposition& decomposition() const { return decomp_; }

    double min_eigenvalue() const { return decomp_.eigenvalues.front(); }
    double max_eigenvalue() const { return decomp_.eigenvalues.back(); }

    double operator()(int i, int j) const { return sym_(i, j); }

  private:
    SymMatrix sym_;
    SpectralDecomposition decomp_;
};

} // namespace opineq
