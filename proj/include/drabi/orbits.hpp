#pragma once

#include <array>
#include <vector>

#include "drabi/classical.hpp"
#include "drabi/model.hpp"

namespace drabi::orbits {

enum class Well { left, right, joined };

/// Nonnegative momentum branch p(eps, q) of a classical orbit,
/// p^2 = (w0/w)(eps + sqrt(1 + 2 w g^2 q^2/w0) - 2 alpha q/sqrt(w0)) - q^2.
struct MomentumBranch {
    double eps;
    std::vector<double> q_grid;
    std::vector<double> p_values;
    std::vector<double> turning_points;  // q where p = 0 (2 per connected branch)
    Well well;
};

/// p(eps,q)^2; the orbit domain is where this is >= 0.
double p_squared(double eps, double q, const ModelParams& mp);

/// Extract one connected branch of the orbit at energy eps.
/// Throws EmptyBranch when the requested well does not exist at this energy
/// (a `joined` request requires a single connected component).
MomentumBranch momentum_branch(double eps, const ModelParams& mp, Well well,
                               int n_grid = 512);

/// Classical level density rho(eps) = (1/2pi) sum_branches int dq / |p(eps,q)|.
/// Normalized so the g=0, alpha=0 harmonic limit gives exactly 1/2.
/// Inverse-square-root turning-point singularities are removed by the
/// substitution q = q_turn +- s^2. Throws SingularEnergy at eps_c1/eps_c2.
double level_density(double eps, const ModelParams& mp);

/// Closed-orbit action  oint p dq = 2 int_{q-}^{q+} p(eps,q) dq  in the chosen
/// well, adaptive quadrature with the same endpoint substitution (rel. 1e-9).
double ebk_action(double eps, const ModelParams& mp, Well well);

/// Semiclassical levels from  oint p dq = 2 pi (n + 1/2), n = 0..n_max, for one
/// well; the resulting energies carry the vacuum shift eps -> eps - w/w0.
/// Throws WellCeiling when 2 pi (n+1/2) exceeds the well action at eps_c2.
std::vector<double> ebk_levels(const ModelParams& mp, Well well, int n_max);

/// Photon-number truncation suggestion: the classical orbit at energy eps_top
/// occupies Fock states up to (p^2+q^2)/2; add an Airy-tail margin.
int suggest_n_ph(const ModelParams& mp, double eps_top);

const char* to_string(Well w);

}  // namespace drabi::orbits
