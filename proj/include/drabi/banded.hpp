#pragma once

#include <vector>

#include <Eigen/Dense>

namespace drabi::banded {

/// Real symmetric band matrix, LAPACK lower storage:
/// element (j+i, j) at ab[i + j*(kd+1)], i = 0..kd.
struct SymBand {
    int n = 0;
    int kd = 0;
    std::vector<double> ab;

    SymBand() = default;
    SymBand(int n_, int kd_) : n(n_), kd(kd_), ab(static_cast<size_t>(kd_ + 1) * n_, 0.0) {}

    double& at(int i, int j) { return ab[(i - j) + static_cast<size_t>(j) * (kd + 1)]; }
    double get(int i, int j) const {
        if (i < j) std::swap(i, j);
        if (i - j > kd) return 0.0;
        return ab[(i - j) + static_cast<size_t>(j) * (kd + 1)];
    }

    void matvec(const double* x, double* y) const;
    double norm_inf() const;
    Eigen::MatrixXd dense() const;
};

/// All eigenvalues, ascending (band tridiagonalization + QL without vectors).
std::vector<double> eigenvalues_all(const SymBand& H);

/// Eigenvalues strictly below `cutoff`, ascending (bisection on the reduced
/// tridiagonal form; cheap when only a spectral window is needed).
std::vector<double> eigenvalues_below(const SymBand& H, double cutoff);

/// Eigenvalues with 0-based sorted indices il..iu inclusive.
std::vector<double> eigenvalues_index(const SymBand& H, int il, int iu);

/// Eigenvectors for the given (accurate) eigenvalues by inverse iteration on
/// the band matrix, with reorthogonalization inside close clusters.
/// Columns are normalized; deterministic for fixed inputs.
Eigen::MatrixXd eigenvectors_for(const SymBand& H, const std::vector<double>& lambdas);

}  // namespace drabi::banded
