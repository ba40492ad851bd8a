#pragma once

#include <vector>

namespace drabi::toy {

/// Quartic toy potential V(x) = x^4 + b x^2 + c x.
struct ToyParams {
    double b = 0.0;
    double c = 0.0;
};

enum class PointKind { global_min, local_min, local_max, inflection };

struct StationaryPoint {
    double x;        // position with dV/dx = 0
    double v;        // V(x)
    PointKind kind;  // from the sign of d2V/dx2
};

double eval_potential(double x, const ToyParams& p);

/// All real roots of dV/dx = 4x^3 + 2bx + c = 0, classified, ascending in x.
/// Closed-form cubic (trigonometric / Cardano) plus one Newton polish step.
/// A point is an inflection when |d2V/dx2| < 1e-8 * (1 + |b|).
std::vector<StationaryPoint> critical_points(const ToyParams& p);

/// b_c = -(3/2) c^(2/3): below it the potential has 3 stationary points, above 1.
double critical_coupling(double c);

const char* to_string(PointKind k);

}  // namespace drabi::toy
