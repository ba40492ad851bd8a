#pragma once

#include <cmath>
#include <string>

#include "drabi/errors.hpp"

namespace drabi {

/// Parameters of the deformed Rabi Hamiltonian
///   H = w a'a + w0 Jz + sqrt(w*w0) g (a'+a) Jx + sqrt(w0/2) alpha (a'+a)
/// for a j=1/2 atom. The thermodynamic limit is w0/w -> infinity.
struct ModelParams {
    double omega = 1.0;    // field frequency (sets the unit scale)
    double omega0 = 1.0;   // level splitting; system-size parameter
    double g = 0.0;        // atom-field coupling
    double alpha = 0.0;    // parity-breaking deformation strength

    void validate() const {
        if (!(omega > 0.0)) throw ValidationError("omega must be > 0");
        if (!(omega0 > 0.0)) throw ValidationError("omega0 must be > 0");
        if (!(g >= 0.0)) throw ValidationError("g must be >= 0");
        if (!std::isfinite(alpha)) throw ValidationError("alpha must be finite");
    }

    ModelParams with_g(double gnew) const {
        ModelParams p = *this;
        p.g = gnew;
        return p;
    }
};

/// Truncated photon basis. Product space |n> x |m_z>, n = 0..n_ph, m_z = -1/2, +1/2.
/// Basis ordering is boson-major, spin-minor: index = 2n + s, s in {0,1},
/// with s=0 <-> m_z=-1/2 and s=1 <-> m_z=+1/2.
struct FockBasis {
    int n_ph;

    explicit FockBasis(int nph) : n_ph(nph) {
        if (n_ph < 1) throw ValidationError("n_ph must be >= 1");
    }
    int dim() const { return 2 * (n_ph + 1); }
    int n_boson() const { return n_ph + 1; }
};

// Reduced energy scale eps = E/(w0 j) = 2E/w0 for j=1/2.
inline double to_reduced(double E, const ModelParams& p) { return 2.0 * E / p.omega0; }
inline double to_absolute(double eps, const ModelParams& p) { return 0.5 * eps * p.omega0; }

}  // namespace drabi
