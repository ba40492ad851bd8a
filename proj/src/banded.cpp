#include "drabi/banded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <lapacke.h>

#include "drabi/errors.hpp"

namespace drabi::banded {

namespace {

// Deterministic LAPACK behavior: keep the BLAS single-threaded; parallelism
// lives at the task level.
struct BlasSingleThread {
    BlasSingleThread() { setenv("OPENBLAS_NUM_THREADS", "1", 0); }
};
const BlasSingleThread blas_env_init;

// dsbtrd destroys its input; reduce a copy to tridiagonal (d, e).
void to_tridiag(const SymBand& H, std::vector<double>& d, std::vector<double>& e) {
    std::vector<double> ab(H.ab);
    d.resize(H.n);
    e.resize(H.n > 0 ? H.n - 1 : 0);
    double q_dummy = 0.0;
    const int info = LAPACKE_dsbtrd(LAPACK_COL_MAJOR, 'N', 'L', H.n, H.kd, ab.data(),
                                    H.kd + 1, d.data(), e.data(), &q_dummy, 1);
    if (info != 0) throw NoConvergence("dsbtrd failed, info=" + std::to_string(info));
}

std::vector<double> stebz(const std::vector<double>& d, const std::vector<double>& e,
                          char range, double vl, double vu, int il, int iu) {
    const int n = static_cast<int>(d.size());
    lapack_int m = 0, nsplit = 0;
    std::vector<double> w(n);
    std::vector<lapack_int> iblock(n), isplit(n);
    const int info =
        LAPACKE_dstebz(range, 'E', n, vl, vu, il, iu, 0.0, d.data(), e.data(), &m,
                       &nsplit, w.data(), iblock.data(), isplit.data());
    if (info != 0) throw NoConvergence("dstebz failed, info=" + std::to_string(info));
    w.resize(m);
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace

void SymBand::matvec(const double* x, double* y) const {
    for (int i = 0; i < n; ++i) y[i] = 0.0;
    for (int j = 0; j < n; ++j) {
        const double xj = x[j];
        const size_t col = static_cast<size_t>(j) * (kd + 1);
        y[j] += ab[col] * xj;
        const int imax = std::min(kd, n - 1 - j);
        for (int i = 1; i <= imax; ++i) {
            const double a = ab[col + i];
            y[j + i] += a * xj;
            y[j] += a * x[j + i];
        }
    }
}

double SymBand::norm_inf() const {
    std::vector<double> row(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const size_t col = static_cast<size_t>(j) * (kd + 1);
        row[j] += std::abs(ab[col]);
        const int imax = std::min(kd, n - 1 - j);
        for (int i = 1; i <= imax; ++i) {
            row[j] += std::abs(ab[col + i]);
            row[j + i] += std::abs(ab[col + i]);
        }
    }
    return *std::max_element(row.begin(), row.end());
}

Eigen::MatrixXd SymBand::dense() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = j; i <= std::min(n - 1, j + kd); ++i) {
            M(i, j) = get(i, j);
            M(j, i) = M(i, j);
        }
    return M;
}

std::vector<double> eigenvalues_all(const SymBand& H) {
    std::vector<double> d, e;
    to_tridiag(H, d, e);
    const int info = LAPACKE_dsterf(H.n, d.data(), e.data());
    if (info != 0) throw NoConvergence("dsterf failed, info=" + std::to_string(info));
    return d;
}

std::vector<double> eigenvalues_below(const SymBand& H, double cutoff) {
    std::vector<double> d, e;
    to_tridiag(H, d, e);
    const double lo = -1.0 - H.norm_inf();
    return stebz(d, e, 'V', lo, cutoff, 0, 0);
}

std::vector<double> eigenvalues_index(const SymBand& H, int il, int iu) {
    if (il < 0 || iu >= H.n || il > iu)
        throw IndexOutOfRange("eigenvalue index range out of bounds");
    std::vector<double> d, e;
    to_tridiag(H, d, e);
    return stebz(d, e, 'I', 0.0, 0.0, il + 1, iu + 1);
}

Eigen::MatrixXd eigenvectors_for(const SymBand& H, const std::vector<double>& lambdas) {
    const int n = H.n;
    const int kd = H.kd;
    const int k = static_cast<int>(lambdas.size());
    Eigen::MatrixXd V(n, k);
    if (k == 0) return V;

    const double hnorm = std::max(H.norm_inf(), 1e-300);
    const double cluster_tol = 1e-5 * hnorm;   // reorthogonalize below this gap
    const double sep = 2e-15 * hnorm;          // shift separation inside a cluster

    const int kl = kd, ku = kd, ldab = 2 * kl + ku + 1;
    std::vector<double> band0(static_cast<size_t>(ldab) * n, 0.0);
    // dgbtrf layout: element (i,j) at ab[kl + ku + i - j + j*ldab]
    for (int j = 0; j < n; ++j)
        for (int i = std::max(0, j - kd); i <= std::min(n - 1, j + kd); ++i)
            band0[kl + ku + i - j + static_cast<size_t>(j) * ldab] = H.get(i, j);

    std::vector<double> fac(band0.size());
    std::vector<lapack_int> ipiv(n);
    Eigen::VectorXd x(n), r(n);

    int cluster_start = 0;
    for (int m = 0; m < k; ++m) {
        double shift = lambdas[m];
        if (m > 0 && lambdas[m] - lambdas[m - 1] < cluster_tol) {
            // keep shifts distinct inside the cluster so the solves differ
            shift = std::max(shift, lambdas[m - 1] + sep) + (m - cluster_start) * sep;
        } else {
            cluster_start = m;
        }

        // deterministic pseudo-random start vector
        uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(m) << 32) ^
                         static_cast<uint64_t>(n);
        for (int i = 0; i < n; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            x[i] = static_cast<double>(static_cast<int64_t>(state >> 11)) / 9.0e18;
        }
        x.normalize();

        bool factored = false;
        for (int attempt = 0; attempt < 3 && !factored; ++attempt) {
            fac = band0;
            for (int j = 0; j < n; ++j) fac[kl + ku + static_cast<size_t>(j) * ldab] -= shift;
            const int info =
                LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, fac.data(), ldab, ipiv.data());
            if (info == 0) factored = true;
            else shift += sep;  // exact singularity: nudge the shift
        }
        if (!factored) throw NoConvergence("inverse iteration: factorization failed");

        for (int it = 0; it < 5; ++it) {
            r = x;
            LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kl, ku, 1, fac.data(), ldab,
                           ipiv.data(), r.data(), n);
            const double growth = r.norm();
            x = r / growth;
            // orthogonalize against the current cluster
            for (int j = cluster_start; j < m; ++j) x -= V.col(j).dot(x) * V.col(j);
            const double nx = x.norm();
            if (nx < 1e-8) {  // start vector lay in the cluster span: restart
                for (int i = 0; i < n; ++i) {
                    state = state * 6364136223846793005ull + 1442695040888963407ull;
                    x[i] = static_cast<double>(static_cast<int64_t>(state >> 11)) / 9.0e18;
                }
                x.normalize();
                continue;
            }
            x /= nx;
            if (growth * nx > 1.0 / (100.0 * 1e-16 * hnorm) && it >= 1) break;
        }
        V.col(m) = x;
    }
    return V;
}

}  // namespace drabi::banded
