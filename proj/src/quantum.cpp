#include "drabi/quantum.hpp"

#include <algorithm>
#include <cmath>

#include <lapacke.h>

#include "drabi/classical.hpp"
#include "drabi/errors.hpp"

namespace drabi::quantum {

banded::SymBand build_hamiltonian_banded(const ModelParams& mp, const FockBasis& basis) {
    mp.validate();
    banded::SymBand H(basis.dim(), 3);
    fill_hamiltonian(H, mp.omega, mp.omega0, mp.g, mp.alpha, basis.n_ph);
    return H;
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& mp, const FockBasis& basis) {
    return build_hamiltonian_banded(mp, basis).dense();
}

namespace {

// boson ladder element sqrt(n+1) between Fock n and n+1, spin structure per
// observable; everything except c_op fits in bandwidth 3
void fill_observable(banded::SymBand& B, Obs which, const ModelParams& mp, int n_ph) {
    switch (which) {
        case Obs::number:
            for (int n = 0; n <= n_ph; ++n)
                for (int s = 0; s <= 1; ++s) B.at(2 * n + s, 2 * n + s) = n;
            break;
        case Obs::jz:
            for (int n = 0; n <= n_ph; ++n)
                for (int s = 0; s <= 1; ++s) B.at(2 * n + s, 2 * n + s) = s - 0.5;
            break;
        case Obs::jx:
            for (int n = 0; n <= n_ph; ++n) B.at(2 * n + 1, 2 * n) = 0.5;
            break;
        case Obs::quadrature_q:
            for (int n = 0; n < n_ph; ++n) {
                const double v = std::sqrt((n + 1) / 2.0);
                B.at(2 * n + 2, 2 * n) = v;
                B.at(2 * n + 3, 2 * n + 1) = v;
            }
            break;
        case Obs::displacement:
            for (int n = 0; n < n_ph; ++n) {
                const double v = std::sqrt(n + 1.0);
                B.at(2 * n + 2, 2 * n) = v;
                B.at(2 * n + 3, 2 * n + 1) = v;
            }
            break;
        case Obs::h_int:
            for (int n = 0; n < n_ph; ++n) {
                const double v =
                    std::sqrt(mp.omega * mp.omega0) * std::sqrt(n + 1.0) * 0.5;
                B.at(2 * n + 2, 2 * n + 1) = v;
                B.at(2 * n + 3, 2 * n) = v;
            }
            break;
        case Obs::c_op:
            throw ValidationError("c_op has no banded form; use build_c_operator");
    }
}

}  // namespace

banded::SymBand build_observable_banded(Obs which, const ModelParams& mp,
                                        const FockBasis& basis) {
    banded::SymBand B(basis.dim(), 3);
    fill_observable(B, which, mp, basis.n_ph);
    return B;
}

ObservableMatrix build_observable(Obs which, const ModelParams& mp, const FockBasis& basis) {
    return {which, build_observable_banded(which, mp, basis).dense(), 0};
}

QuadratureBasis QuadratureBasis::build(const FockBasis& basis) {
    const int nb = basis.n_boson();
    QuadratureBasis qb;
    qb.q.resize(nb);
    std::vector<double> e(nb - 1);
    qb.q.setZero();
    for (int n = 0; n + 1 < nb; ++n) e[n] = std::sqrt((n + 1) / 2.0);
    qb.U.resize(nb, nb);
    // q is tridiagonal in Fock space with zero diagonal: dsteqr
    const int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', nb, qb.q.data(), e.data(),
                                   qb.U.data(), nb);
    if (info != 0) throw NoConvergence("dstev(q) failed, info=" + std::to_string(info));
    return qb;
}

void QuadratureBasis::project(const Eigen::Ref<const Eigen::VectorXd>& v,
                              Eigen::VectorXd& w0, Eigen::VectorXd& w1) const {
    const int nb = static_cast<int>(q.size());
    Eigen::VectorXd v0(nb), v1(nb);
    for (int n = 0; n < nb; ++n) {
        v0[n] = v[2 * n];
        v1[n] = v[2 * n + 1];
    }
    w0.noalias() = U.transpose() * v0;
    w1.noalias() = U.transpose() * v1;
}

double QuadratureBasis::c_expectation(const Eigen::Ref<const Eigen::VectorXd>& v,
                                      double q_c) const {
    Eigen::VectorXd w0, w1;
    project(v, w0, w1);
    double acc = 0.0;
    for (int k = 0; k < q.size(); ++k) {
        const double sgn = (q[k] - q_c >= -1e-12) ? 1.0 : -1.0;
        acc += sgn * (w0[k] * w0[k] + w1[k] * w1[k]);
    }
    return acc;
}

Eigen::VectorXd QuadratureBasis::c_diag_batch(const Eigen::Ref<const Eigen::MatrixXd>& V,
                                              double q_c) const {
    const int nb = static_cast<int>(q.size());
    const int k = static_cast<int>(V.cols());
    Eigen::MatrixXd V0(nb, k), V1(nb, k);
    for (int n = 0; n < nb; ++n) {
        V0.row(n) = V.row(2 * n);
        V1.row(n) = V.row(2 * n + 1);
    }
    Eigen::MatrixXd W0 = U.transpose() * V0;
    Eigen::MatrixXd W1 = U.transpose() * V1;
    Eigen::VectorXd sgn(nb);
    for (int i = 0; i < nb; ++i) sgn[i] = (q[i] - q_c >= -1e-12) ? 1.0 : -1.0;
    Eigen::VectorXd out(k);
    for (int j = 0; j < k; ++j)
        out[j] = (W0.col(j).array().square() * sgn.array()).sum() +
                 (W1.col(j).array().square() * sgn.array()).sum();
    return out;
}

ObservableMatrix build_c_operator(double q_c, const FockBasis& basis) {
    const auto qb = QuadratureBasis::build(basis);
    const int nb = basis.n_boson();
    Eigen::VectorXd sgn(nb);
    int degenerate = 0;
    for (int i = 0; i < nb; ++i) {
        if (std::abs(qb.q[i] - q_c) < 1e-12) {
            sgn[i] = 1.0;  // undefined sign resolved to +1
            ++degenerate;
        } else {
            sgn[i] = qb.q[i] > q_c ? 1.0 : -1.0;
        }
    }
    Eigen::MatrixXd cb = qb.U * sgn.asDiagonal() * qb.U.transpose();
    cb = 0.5 * (cb + cb.transpose()).eval();

    ObservableMatrix out;
    out.name = Obs::c_op;
    out.degenerate_sign_count = degenerate;
    out.matrix = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
    for (int m = 0; m < nb; ++m)
        for (int n = 0; n < nb; ++n)
            for (int s = 0; s <= 1; ++s) out.matrix(2 * m + s, 2 * n + s) = cb(m, n);
    return out;
}

Spectrum diagonalize(const Eigen::MatrixXd& H, const ModelParams& mp, int n_ph) {
    const int d = static_cast<int>(H.rows());
    Spectrum spec;
    spec.params = mp;
    spec.n_ph = n_ph;
    spec.vectors = H;
    spec.energies.resize(d);
    const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', d, spec.vectors.data(),
                                    d, spec.energies.data());
    if (info != 0) throw NoConvergence("dsyevd failed, info=" + std::to_string(info));
    spec.reduced = 2.0 * spec.energies / mp.omega0;
    return spec;
}

Spectrum diagonalize_banded(const banded::SymBand& H, const ModelParams& mp, int n_ph,
                            double e_cut) {
    Spectrum spec;
    spec.params = mp;
    spec.n_ph = n_ph;
    const auto evals = banded::eigenvalues_all(H);
    spec.energies = Eigen::Map<const Eigen::VectorXd>(evals.data(), evals.size());
    spec.reduced = 2.0 * spec.energies / mp.omega0;
    int k = 0;
    while (k < static_cast<int>(evals.size()) && evals[k] < e_cut) ++k;
    if (k > 0) {
        std::vector<double> head(evals.begin(), evals.begin() + k);
        spec.vectors = banded::eigenvectors_for(H, head);
    } else {
        spec.vectors.resize(H.n, 0);
    }
    return spec;
}

Spectrum spectrum_of(const ModelParams& mp, int n_ph, double eps_cut) {
    const FockBasis basis(n_ph);
    const auto H = build_hamiltonian_banded(mp, basis);
    return diagonalize_banded(H, mp, n_ph, to_absolute(eps_cut, mp));
}

Label label_of(double c_value) {
    if (c_value <= -0.95) return Label::minus;
    if (c_value >= 0.95) return Label::plus;
    return Label::unassigned;
}

void attach_c_labels(Spectrum& spec, const QuadratureBasis& qb, double q_c) {
    const int k = spec.n_vectors();
    spec.c_diag = qb.c_diag_batch(spec.vectors, q_c);
    spec.labels.resize(k);
    for (int i = 0; i < k; ++i) spec.labels[i] = label_of(spec.c_diag[i]);
}

std::vector<double> diagonal_expectation(const Spectrum& spec, const ObservableMatrix& obs) {
    if (obs.matrix.rows() != spec.vectors.rows())
        throw BasisMismatch("observable and spectrum dimensions differ");
    std::vector<double> out(spec.n_vectors());
    for (int i = 0; i < spec.n_vectors(); ++i)
        out[i] = spec.vectors.col(i).dot(obs.matrix * spec.vectors.col(i));
    return out;
}

std::vector<double> diagonal_expectation(const Spectrum& spec, const banded::SymBand& obs) {
    if (obs.n != spec.vectors.rows())
        throw BasisMismatch("observable and spectrum dimensions differ");
    std::vector<double> out(spec.n_vectors());
    Eigen::VectorXd y(obs.n);
    for (int i = 0; i < spec.n_vectors(); ++i) {
        obs.matvec(spec.vectors.col(i).data(), y.data());
        out[i] = spec.vectors.col(i).dot(y);
    }
    return out;
}

double max_eigen_residual(const Spectrum& spec, const banded::SymBand& H) {
    double worst = 0.0;
    Eigen::VectorXd y(H.n);
    for (int i = 0; i < spec.n_vectors(); ++i) {
        H.matvec(spec.vectors.col(i).data(), y.data());
        y -= spec.energies[i] * spec.vectors.col(i);
        worst = std::max(worst, y.norm());
    }
    return worst;
}

GsIndicators gs_indicators(double alpha, const std::vector<double>& g_grid,
                           const ModelParams& base, int n_ph) {
    if (g_grid.size() < 3) throw ValidationError("gs_indicators needs >= 3 grid points");
    const double h = g_grid[1] - g_grid[0];
    for (size_t i = 1; i + 1 < g_grid.size(); ++i)
        if (std::abs(g_grid[i + 1] - g_grid[i] - h) > 1e-9 * h)
            throw ValidationError("gs_indicators requires a uniform g grid");

    GsIndicators out;
    out.g = g_grid;
    const FockBasis basis(n_ph);
    for (double g : g_grid) {
        ModelParams mp = base;
        mp.alpha = alpha;
        mp.g = g;
        out.eps_gs_classical.push_back(classical::critical_set(mp).eps_gs);

        const auto H = build_hamiltonian_banded(mp, basis);
        const auto e0 = banded::eigenvalues_index(H, 0, 0);
        out.eps_gs_quantum.push_back(to_reduced(e0[0], mp));
        const auto v0 = banded::eigenvectors_for(H, e0);
        const auto N = build_observable_banded(Obs::number, mp, basis);
        Eigen::VectorXd y(H.n);
        N.matvec(v0.col(0).data(), y.data());
        out.n_gs.push_back(v0.col(0).dot(y));
    }

    const size_t n = g_grid.size();
    auto second_diff = [&](const std::vector<double>& f, size_t i) {
        return (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
    };
    out.d2_eps_gs_classical.assign(n, NAN);
    out.d2_eps_gs_quantum.assign(n, NAN);
    out.dn_gs_dg.assign(n, NAN);
    for (size_t i = 1; i + 1 < n; ++i) {
        out.d2_eps_gs_classical[i] = second_diff(out.eps_gs_classical, i);
        out.d2_eps_gs_quantum[i] = second_diff(out.eps_gs_quantum, i);
        out.dn_gs_dg[i] = (out.n_gs[i + 1] - out.n_gs[i - 1]) / (2.0 * h);
    }
    return out;
}

double truncation_check(const ModelParams& mp, int n_ph, int k_levels) {
    if (n_ph < 2) throw ValidationError("truncation_check requires n_ph >= 2");
    const auto e1 = banded::eigenvalues_all(build_hamiltonian_banded(mp, FockBasis(n_ph)));
    const auto e2 =
        banded::eigenvalues_all(build_hamiltonian_banded(mp, FockBasis(2 * n_ph)));
    const int k = std::min<int>(k_levels, static_cast<int>(e1.size()));
    double worst = 0.0;
    for (int i = 0; i < k; ++i)
        worst = std::max(worst, std::abs(to_reduced(e1[i], mp) - to_reduced(e2[i], mp)));
    return worst;
}

const char* to_string(Label l) {
    switch (l) {
        case Label::minus: return "minus";
        case Label::plus: return "plus";
        case Label::unassigned: return "unassigned";
    }
    return "?";
}

}  // namespace drabi::quantum
