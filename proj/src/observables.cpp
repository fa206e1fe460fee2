#include "qwc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwc {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("empty distribution");
    }
    for (double p : probs_) {
        if (!std::isfinite(p) || p < -1e-12) {
            throw std::invalid_argument("distribution has a negative or non-finite entry");
        }
    }
    if (std::abs(sum() - 1.0) > 1e-10) {
        throw std::invalid_argument("distribution does not sum to one");
    }
}

double Distribution::sum() const { return std::accumulate(probs_.begin(), probs_.end(), 0.0); }

Distribution Distribution::clipped(std::vector<double> probs, double tol) {
    for (double& p : probs) {
        if (p < 0.0 && p >= -tol) {
            p = 0.0;
        }
    }
    const double s = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (s > 0.0) {
        for (double& p : probs) {
            p /= s;
        }
    }
    return Distribution(std::move(probs));
}

double max_abs_diff(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distribution sizes differ");
    }
    double m = 0.0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        m = std::max(m, std::abs(a[v] - b[v]));
    }
    return m;
}

double hermiticity_defect(const Mat2& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

std::pair<double, double> hermitian_eigenvalues(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const cplx b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean + half_gap, mean - half_gap};
}

ReducedDensity::ReducedDensity(const Mat2& m, double tol) : m_(m) {
    if (!m.allFinite()) {
        throw std::invalid_argument("reduced density has non-finite entries");
    }
    if (hermiticity_defect(m) > tol) {
        throw std::invalid_argument("reduced density is not Hermitian");
    }
    if (std::abs(m.trace() - cplx{1.0, 0.0}) > tol) {
        throw std::invalid_argument("reduced density does not have unit trace");
    }
    if (hermitian_eigenvalues(m).second < -tol) {
        throw std::invalid_argument("reduced density is not positive semidefinite");
    }
}

std::pair<double, double> ReducedDensity::eigenvalues() const { return hermitian_eigenvalues(m_); }

DensityMatrix::DensityMatrix(std::size_t n_nodes, ComplexMat m) : n_(n_nodes), m_(std::move(m)) {
    if (n_ == 0 || m_.rows() != static_cast<Eigen::Index>(2 * n_) || m_.cols() != m_.rows()) {
        throw std::invalid_argument("density matrix must be 2N x 2N");
    }
}

double DensityMatrix::hermiticity_defect() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    const ComplexMat h = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace qwc
