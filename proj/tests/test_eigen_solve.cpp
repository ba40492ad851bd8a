#include "doctest.h"

#include <cmath>
#include <random>

#include "drabi/banded.hpp"
#include "drabi/highprec.hpp"
#include "drabi/hp_eigen.hpp"
#include "drabi/model.hpp"
#include "drabi/quantum.hpp"

using namespace drabi;

namespace {

banded::SymBand random_band(int n, int kd, uint64_t seed) {
    banded::SymBand H(n, kd);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int j = 0; j < n; ++j)
        for (int i = j; i <= std::min(n - 1, j + kd); ++i) H.at(i, j) = u(rng);
    return H;
}

std::vector<double> dense_eigenvalues(const banded::SymBand& H) {
    ModelParams mp;
    mp.omega0 = 2.0;  // irrelevant scaling for this helper
    const auto spec = quantum::diagonalize(H.dense(), mp, H.n / 2 - 1);
    return std::vector<double>(spec.energies.data(), spec.energies.data() + H.n);
}

}  // namespace

TEST_CASE("banded eigenvalues match dense LAPACK") {
    const auto H = random_band(160, 3, 42);
    const auto ref = dense_eigenvalues(H);
    const auto got = banded::eigenvalues_all(H);
    REQUIRE(got.size() == ref.size());
    const double scale = H.norm_inf();
    for (size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(got[i] - ref[i]) < 1e-12 * scale);
}

TEST_CASE("windowed and indexed eigenvalues agree with the full set") {
    const auto H = random_band(120, 3, 7);
    const auto all = banded::eigenvalues_all(H);
    const double cutoff = all[30] + 1e-13;
    const auto below = banded::eigenvalues_below(H, cutoff);
    REQUIRE(below.size() == 31);
    for (int i = 0; i < 31; ++i) CHECK(below[i] == doctest::Approx(all[i]).epsilon(1e-12));

    const auto mid = banded::eigenvalues_index(H, 40, 44);
    REQUIRE(mid.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(mid[i] == doctest::Approx(all[40 + i]).epsilon(1e-12));
}

TEST_CASE("inverse iteration: residuals and orthonormality") {
    const auto H = random_band(200, 3, 11);
    const auto all = banded::eigenvalues_all(H);
    std::vector<double> want(all.begin(), all.begin() + 60);
    const auto V = banded::eigenvectors_for(H, want);
    const double scale = H.norm_inf();

    Eigen::VectorXd y(H.n);
    for (int i = 0; i < 60; ++i) {
        H.matvec(V.col(i).data(), y.data());
        y -= want[i] * V.col(i);
        CHECK(y.norm() < 1e-11 * scale);
    }
    Eigen::MatrixXd G = V.transpose() * V - Eigen::MatrixXd::Identity(60, 60);
    CHECK(G.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("inverse iteration handles a near-degenerate cluster") {
    // two almost-decoupled identical chains: paired eigenvalues split by ~w
    const int half = 40;
    banded::SymBand H(2 * half, 3);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int j = 0; j < 2 * half; j += 2) {
        const double d = u(rng);
        H.at(j, j) = d;
        H.at(j + 1, j + 1) = d;
        if (j + 2 < 2 * half) {
            const double o = u(rng);
            H.at(j + 2, j) = o;
            H.at(j + 3, j + 1) = o;
        }
        H.at(j + 1, j) = 1e-9 * u(rng);  // weak inter-chain coupling
    }
    const auto all = banded::eigenvalues_all(H);
    const auto V = banded::eigenvectors_for(H, all);
    Eigen::MatrixXd G =
        V.transpose() * V - Eigen::MatrixXd::Identity(2 * half, 2 * half);
    CHECK(G.cwiseAbs().maxCoeff() < 1e-9);
    Eigen::VectorXd y(H.n);
    for (int i = 0; i < 2 * half; ++i) {
        H.matvec(V.col(i).data(), y.data());
        y -= all[i] * V.col(i);
        CHECK(y.norm() < 1e-10 * H.norm_inf());
    }
}

TEST_CASE("scalar-generic band reduction reproduces LAPACK eigenvalues (double)") {
    const int n = 90;
    const auto H = random_band(n, 3, 99);
    hp::SymBandT<double> A(n, 3);
    for (int j = 0; j < n; ++j)
        for (int i = j; i <= std::min(n - 1, j + 3); ++i) A.at(i, j) = H.get(i, j);
    std::vector<double> d, e;
    hp::band_to_tridiag(A, d, e);
    const auto ref = banded::eigenvalues_all(H);
    for (int k : {0, 1, 7, 44, 45, 88, 89}) {
        const double lam = hp::tridiag_eigenvalue(d, e, k, 1e-13);
        CHECK(lam == doctest::Approx(ref[k]).epsilon(1e-11));
    }
}

TEST_CASE("Jacobi agrees with LAPACK on a dense symmetric matrix (double)") {
    const int n = 40;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(n * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) {
            a[i + j * n] = u(rng);
            a[j + i * n] = a[i + j * n];
        }
    Eigen::MatrixXd M = Eigen::Map<Eigen::MatrixXd>(a.data(), n, n);
    ModelParams mp;
    const auto ref = quantum::diagonalize(M, mp, n / 2 - 1);

    auto res = hp::jacobi_eigen(a, n, true);
    for (int i = 0; i < n; ++i)
        CHECK(res.values[i] == doctest::Approx(ref.energies[i]).epsilon(1e-12));
    // residual check of the accumulated vectors
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = res.vectors[i + static_cast<size_t>(j) * n];
        CHECK((M * v - res.values[j] * v).norm() < 1e-12 * M.norm());
    }
}

TEST_CASE("256-bit Jacobi resolves a 1e-30 gap") {
    hp::PrecisionGuard guard(256);
    using R = hp::Real;
    const R delta("1e-30");
    std::vector<R> a = {R(0), delta, delta, R(0)};
    auto res = hp::jacobi_eigen(a, 2, false);
    CHECK(abs(res.values[0] + delta) < R("1e-60"));
    CHECK(abs(res.values[1] - delta) < R("1e-60"));
    CHECK(abs((res.values[1] - res.values[0]) - R("2e-30")) < R("1e-60"));

    std::vector<R> ident = {R(1), R(0), R(0), R(1)};
    auto id = hp::jacobi_eigen(ident, 2, false);
    CHECK(id.values[0] == R(1));
    CHECK(id.values[1] == R(1));
}

TEST_CASE("256-bit band reduction + Sturm bisection matches 256-bit Jacobi") {
    hp::PrecisionGuard guard(256);
    using R = hp::Real;
    const int n_ph = 6;
    const int n = 2 * (n_ph + 1);
    hp::SymBandT<R> A(n, 3);
    quantum::fill_hamiltonian(A, R(1), R(20), R("2.5"), R("0.5"), n_ph);

    std::vector<R> dense(static_cast<size_t>(n) * n, R(0));
    for (int j = 0; j < n; ++j)
        for (int i = j; i <= std::min(n - 1, j + 3); ++i) {
            dense[i + static_cast<size_t>(j) * n] = A.at(i, j);
            dense[j + static_cast<size_t>(i) * n] = A.at(i, j);
        }
    auto jac = hp::jacobi_eigen(dense, n, false);

    std::vector<R> d, e;
    hp::band_to_tridiag(A, d, e);
    const R tol = ldexp(R(1), -200);
    for (int k = 0; k < n; ++k) {
        const R lam = hp::tridiag_eigenvalue(d, e, k, tol);
        CHECK(abs(lam - jac.values[k]) < ldexp(R(1), -180) * (R(1) + abs(lam)));
    }
}

TEST_CASE("Sturm bisection separates a sub-double gap at 256 bits") {
    hp::PrecisionGuard guard(256);
    using R = hp::Real;
    // 2x2 via band container: eigenvalues +-1e-25 around 5
    std::vector<R> d = {R(5) - R("1e-25"), R(5) + R("1e-25")};
    std::vector<R> e = {R(0)};
    const R tol("1e-40");
    const R lo = hp::tridiag_eigenvalue(d, e, 0, tol);
    const R hi = hp::tridiag_eigenvalue(d, e, 1, tol);
    CHECK(abs((hi - lo) - R("2e-25")) < R("1e-38"));
}
