#include "opineq/matrix.hpp"

#include <cmath>
#include <string>

#include "opineq/spectral.hpp"

namespace opineq {

namespace {

void check_dim(int dim) {
    if (dim < 1)
        throw std::invalid_argument("SymMatrix: dim must be >= 1, got " + std::to_string(dim));
    if (dim > kMaxDim)
        throw std::invalid_argument("SymMatrix: dim " + std::to_string(dim) +
                                    " exceeds supported limit " + std::to_string(kMaxDim));
}

} // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    data_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymMatrix::SymMatrix(int dim, const std::vector<double>& entries) : dim_(dim) {
    check_dim(dim);
    const size_t n = static_cast<size_t>(dim) * dim;
    if (entries.size() != n)
        throw std::invalid_argument("SymMatrix: expected " + std::to_string(n) + " entries, got " +
                                    std::to_string(entries.size()));
    data_.resize(n);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            data_[static_cast<size_t>(i) * dim + j] =
                0.5 * (entries[static_cast<size_t>(i) * dim + j] +
                       entries[static_cast<size_t>(j) * dim + i]);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.data_[static_cast<size_t>(i) * dim + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
    SymMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.dim_; ++i) m.data_[static_cast<size_t>(i) * m.dim_ + i] = diag[i];
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    data_[static_cast<size_t>(i) * dim_ + j] = value;
    data_[static_cast<size_t>(j) * dim_ + i] = value;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    if (other.dim_ != dim_) throw DimMismatch("SymMatrix +=: dimension mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
    if (other.dim_ != dim_) throw DimMismatch("SymMatrix -=: dimension mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double scalar) {
    for (double& v : data_) v *= scalar;
    return *this;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

double SymMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

SymMatrix SpectralDecomposition::assemble(const std::vector<double>& mapped) const {
    SymMatrix out(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += q_at(i, k) * mapped[k] * q_at(j, k);
            out.set(i, j, s);
        }
    }
    return out;
}

SymMatrix SpectralDecomposition::reconstruct() const { return assemble(eigenvalues); }

SpdMatrix::SpdMatrix(SymMatrix m) : sym_(std::move(m)), decomp_(eigen_sym(sym_)) {
    const double lo = decomp_.eigenvalues.front();
    const double hi = decomp_.eigenvalues.back();
    if (!(lo > 1e-12 * hi) || !(lo > 0.0))
        throw NotPositiveDefinite("SpdMatrix: min eigenvalue " + std::to_string(lo) +
                                  " fails positivity threshold relative to max " +
                                  std::to_string(hi));
}

} // namespace opineq
