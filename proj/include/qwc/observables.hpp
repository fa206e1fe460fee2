#pragma once

#include <cstddef>
#include <vector>

#include "qwc/core.hpp"

namespace qwc {

/// Probability vector over the N cycle nodes.
class Distribution {
public:
    /// Throws std::invalid_argument if entries are below -1e-12 or the sum
    /// is off by more than 1e-10.
    explicit Distribution(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t v) const { return probs_[v]; }
    const std::vector<double>& probs() const { return probs_; }
    double sum() const;

    /// Clips negative dust above -tol to zero and rescales to unit sum.
    static Distribution clipped(std::vector<double> probs, double tol = 1e-12);

private:
    std::vector<double> probs_;
};

/// Max over v of |a[v] - b[v]|; sizes must match.
double max_abs_diff(const Distribution& a, const Distribution& b);

/// 2x2 coin density matrix.
class ReducedDensity {
public:
    /// Throws std::invalid_argument unless Hermitian, unit trace and PSD,
    /// each to `tol`.
    explicit ReducedDensity(const Mat2& m, double tol = 1e-10);

    const Mat2& matrix() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

    /// Eigenvalues in decreasing order (closed form for 2x2 Hermitian).
    std::pair<double, double> eigenvalues() const;

private:
    Mat2 m_;
};

/// 2N x 2N density matrix over coin (x) position, coin-major ordering.
class DensityMatrix {
public:
    DensityMatrix(std::size_t n_nodes, ComplexMat m);

    std::size_t n_nodes() const { return n_; }
    const ComplexMat& matrix() const { return m_; }

    double hermiticity_defect() const;
    cplx trace() const { return m_.trace(); }
    /// Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const;

private:
    std::size_t n_;
    ComplexMat m_;
};

/// Eigenvalues (l1 >= l2) of the Hermitian part of a 2x2 matrix.
std::pair<double, double> hermitian_eigenvalues(const Mat2& m);

double hermiticity_defect(const Mat2& m);

}  // namespace qwc
