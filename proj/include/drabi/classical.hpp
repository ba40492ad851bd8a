#pragma once

#include <optional>
#include <vector>

#include "drabi/model.hpp"

namespace drabi::classical {

/// Reduced-energy classical Hamiltonian of the low-energy spin subspace,
///   H(p,q) = (w/w0)(p^2+q^2) - sqrt(1 + 2 w g^2 q^2 / w0) + 2 alpha q / sqrt(w0).
/// (p,q) are the bosonic quadratures; energies are on the eps = 2E/w0 scale.
double energy(double p, double q, const ModelParams& mp);

double dH_dq(double q, const ModelParams& mp);
double d2H_dq2(double q, const ModelParams& mp);

enum class StatKind { global_min, local_min, local_max, inflection };

struct StationaryPoint {
    double q;
    double p = 0.0;  // always 0 at stationary points
    double eps;
    StatKind kind;
};

/// Stationary points of H and the derived critical energies.
/// eps_c1 (secondary minimum, finite density jump) and eps_c2 (local maximum,
/// logarithmic density divergence) exist together, for g > g_star(alpha).
/// At g = g_star the merged pair is reported with eps_c1 == eps_c2.
struct CriticalSet {
    std::vector<StationaryPoint> points;  // ascending in q
    double eps_gs;
    std::optional<double> eps_c1;
    std::optional<double> eps_c2;
    std::optional<double> q_c;  // position of the local maximum (separatrix)

    bool has_esqpt() const { return eps_c2.has_value(); }
};

CriticalSet critical_set(const ModelParams& mp);

/// Smallest g at which the stationary-point count changes from 1 to 3
/// (single-well to asymmetric double-well). Exactly 1 for alpha = 0.
/// Independent of omega0.
double g_star(double alpha, const ModelParams& base);

inline double g_star(const ModelParams& mp) { return g_star(mp.alpha, mp); }

const char* to_string(StatKind k);

}  // namespace drabi::classical
