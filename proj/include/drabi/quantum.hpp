#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "drabi/banded.hpp"
#include "drabi/model.hpp"

namespace drabi::quantum {

// ---------------------------------------------------------------------------
// Hamiltonian assembly.
//
// In the boson-major basis (index 2n+s) every term of
//   H = w a'a + w0 Jz + sqrt(w w0) g (a'+a) Jx + sqrt(w0/2) alpha (a'+a)
// lives within bandwidth 3:
//   offset 0: w n + w0 (s - 1/2)
//   offset 1: g-coupling between (n,1) and (n+1,0), sqrt(w w0) g sqrt(n+1)/2
//   offset 2: deformation between (n,s) and (n+1,s), sqrt(w0/2) alpha sqrt(n+1)
//   offset 3: g-coupling between (n,0) and (n+1,1), sqrt(w w0) g sqrt(n+1)/2
// ---------------------------------------------------------------------------

/// Fill any band container with .at(i,j) lower access (used with double and
/// with multiprecision scalars).
template <class Band, class T>
void fill_hamiltonian(Band& A, const T& omega, const T& omega0, const T& g,
                      const T& alpha, int n_ph) {
    const T half = T(1) / T(2);
    const T cg = sqrt(omega * omega0) * g * half;
    const T ca = sqrt(omega0 * half) * alpha;
    for (int n = 0; n <= n_ph; ++n) {
        for (int s = 0; s <= 1; ++s) {
            const int idx = 2 * n + s;
            A.at(idx, idx) = omega * T(n) + omega0 * (T(s) - half);
        }
        if (n < n_ph) {
            const T root = sqrt(T(n + 1));
            A.at(2 * n + 2, 2 * n + 1) = cg * root;  // (n,1) <-> (n+1,0)
            A.at(2 * n + 3, 2 * n) = cg * root;      // (n,0) <-> (n+1,1)
            A.at(2 * n + 2, 2 * n) = ca * root;      // (n,0) <-> (n+1,0)
            A.at(2 * n + 3, 2 * n + 1) = ca * root;  // (n,1) <-> (n+1,1)
        }
    }
}

banded::SymBand build_hamiltonian_banded(const ModelParams& mp, const FockBasis& basis);
Eigen::MatrixXd build_hamiltonian(const ModelParams& mp, const FockBasis& basis);

// ---------------------------------------------------------------------------
// Observables
// ---------------------------------------------------------------------------

enum class Obs { number, jx, jz, quadrature_q, displacement, h_int, c_op };

struct ObservableMatrix {
    Obs name;
    Eigen::MatrixXd matrix;
    int degenerate_sign_count = 0;  // c_op only: q-eigenvalues pinned to +1
};

/// Dense observable in the product basis (c_op via build_c_operator).
ObservableMatrix build_observable(Obs which, const ModelParams& mp, const FockBasis& basis);

/// Banded form for the short-ranged observables (all but c_op).
banded::SymBand build_observable_banded(Obs which, const ModelParams& mp,
                                        const FockBasis& basis);

/// Eigenbasis of the boson quadrature q = (a'+a)/sqrt(2); shared by the
/// constant-of-motion expectations and the position distribution.
struct QuadratureBasis {
    Eigen::VectorXd q;  // ascending eigenvalues, one per Fock state
    Eigen::MatrixXd U;  // Fock -> quadrature transform, q_op = U diag(q) U^T

    static QuadratureBasis build(const FockBasis& basis);

    /// Split a full product-space vector into spin components and project
    /// onto the quadrature eigenbasis: W_s[k] = <q_k, s | v>.
    void project(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::VectorXd& w0,
                 Eigen::VectorXd& w1) const;

    /// <v| sign(q - q_c) x I |v> for a full product-space vector.
    double c_expectation(const Eigen::Ref<const Eigen::VectorXd>& v, double q_c) const;

    /// Diagonal <C> for each column of V (columns are product-space vectors).
    Eigen::VectorXd c_diag_batch(const Eigen::Ref<const Eigen::MatrixXd>& V,
                                 double q_c) const;
};

/// C = sign(q - q_c I) (x) I_spin, materialized. Quadrature eigenvalues within
/// 1e-12 of q_c take sign +1 and are counted in degenerate_sign_count.
ObservableMatrix build_c_operator(double q_c, const FockBasis& basis);

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

enum class Label { minus, plus, unassigned };

/// Eigen-decomposition of one Hamiltonian instance. `vectors` holds
/// eigenvectors for the lowest n_vectors() levels (all of them after a dense
/// diagonalization, a spectral window after a banded one).
struct Spectrum {
    ModelParams params;
    int n_ph = 0;
    Eigen::VectorXd energies;  // absolute, ascending
    Eigen::VectorXd reduced;   // 2E/w0
    Eigen::MatrixXd vectors;   // dim x n_vectors, orthonormal columns
    Eigen::VectorXd c_diag;    // <C> per state with a vector; empty until attached
    std::vector<Label> labels;

    int dim() const { return 2 * (n_ph + 1); }
    int n_levels() const { return static_cast<int>(energies.size()); }
    int n_vectors() const { return static_cast<int>(vectors.cols()); }
};

/// Full dense eigendecomposition (machine double precision).
Spectrum diagonalize(const Eigen::MatrixXd& H, const ModelParams& mp, int n_ph);

/// Banded path: all eigenvalues, eigenvectors only for levels with absolute
/// energy below e_cut (pass +inf for all).
Spectrum diagonalize_banded(const banded::SymBand& H, const ModelParams& mp, int n_ph,
                            double e_cut);

/// Convenience: build + diagonalize with a vector window in reduced units.
Spectrum spectrum_of(const ModelParams& mp, int n_ph,
                     double eps_cut = std::numeric_limits<double>::infinity());

/// Threshold labels: minus for <C> <= -0.95, plus for <C> >= +0.95.
Label label_of(double c_value);

/// Compute c_diag and labels for every state with a vector.
void attach_c_labels(Spectrum& spec, const QuadratureBasis& qb, double q_c);

/// Per-eigenstate diagonal matrix elements <n|O|n>, spectrum order.
std::vector<double> diagonal_expectation(const Spectrum& spec, const ObservableMatrix& obs);
std::vector<double> diagonal_expectation(const Spectrum& spec, const banded::SymBand& obs);

/// max_n ||H v_n - E_n v_n|| over states with vectors.
double max_eigen_residual(const Spectrum& spec, const banded::SymBand& H);

// ---------------------------------------------------------------------------
// Ground-state QPT indicators and truncation control
// ---------------------------------------------------------------------------

struct GsIndicators {
    std::vector<double> g;
    std::vector<double> eps_gs_classical;     // thermodynamic-limit value
    std::vector<double> d2_eps_gs_classical;  // centered second difference
    std::vector<double> eps_gs_quantum;       // 2 E_0 / w0 at the given omega0
    std::vector<double> d2_eps_gs_quantum;
    std::vector<double> n_gs;                 // <a'a> in the ground state
    std::vector<double> dn_gs_dg;             // centered first difference
};

/// Ground-state energy and photon-number indicators on a uniform g grid.
GsIndicators gs_indicators(double alpha, const std::vector<double>& g_grid,
                           const ModelParams& base, int n_ph);

/// max over the lowest k levels of |eps_n(n_ph) - eps_n(2 n_ph)|.
double truncation_check(const ModelParams& mp, int n_ph, int k_levels);

const char* to_string(Label l);

}  // namespace drabi::quantum
