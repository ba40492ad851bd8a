#include "drabi/toy_potential.hpp"

#include <algorithm>
#include <cmath>

#include "drabi/errors.hpp"

namespace drabi::toy {

double eval_potential(double x, const ToyParams& p) {
    const double x2 = x * x;
    return x2 * x2 + p.b * x2 + p.c * x;
}

namespace {

double dV(double x, const ToyParams& p) { return 4.0 * x * x * x + 2.0 * p.b * x + p.c; }
double d2V(double x, const ToyParams& p) { return 12.0 * x * x + 2.0 * p.b; }

// Real roots of the depressed cubic t^3 + p1 t + q1 = 0.
std::vector<double> depressed_cubic_roots(double p1, double q1) {
    std::vector<double> roots;
    const double disc = 4.0 * p1 * p1 * p1 + 27.0 * q1 * q1;
    const double disc_scale = 4.0 * std::abs(p1 * p1 * p1) + 27.0 * q1 * q1;
    if (p1 == 0.0 && q1 == 0.0) {
        roots = {0.0};
    } else if (std::abs(disc) <= 1e-11 * disc_scale) {
        // discriminant boundary: a simple root plus a double root
        roots = {3.0 * q1 / p1, -1.5 * q1 / p1, -1.5 * q1 / p1};
        std::sort(roots.begin(), roots.end());
        return roots;
    } else if (disc < 0.0) {
        // three distinct real roots, trigonometric form
        const double m = 2.0 * std::sqrt(-p1 / 3.0);
        const double arg = std::clamp(3.0 * q1 / (p1 * m), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(phi - 2.0 * M_PI * k / 3.0));
    } else {
        // single real root, Cardano
        const double s = std::sqrt(disc / 108.0);
        roots = {std::cbrt(-q1 / 2.0 + s) + std::cbrt(-q1 / 2.0 - s)};
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

double critical_coupling(double c) {
    if (c < 0.0) throw ValidationError("critical_coupling requires c >= 0");
    return -1.5 * std::cbrt(c * c);
}

std::vector<StationaryPoint> critical_points(const ToyParams& p) {
    std::vector<double> xs;
    if (p.c == 0.0) {
        // closed forms: x = 0 and, for b < 0, x = +-sqrt(-b/2)
        xs.push_back(0.0);
        if (p.b < 0.0) {
            const double r = std::sqrt(-p.b / 2.0);
            xs.push_back(-r);
            xs.push_back(r);
        }
        std::sort(xs.begin(), xs.end());
    } else {
        xs = depressed_cubic_roots(p.b / 2.0, p.c / 4.0);
    }

    // one Newton step per root unless the curvature is degenerate
    for (double& x : xs) {
        const double curv = d2V(x, p);
        if (std::abs(curv) > 1e-8 * (1.0 + std::abs(p.b))) {
            const double step = dV(x, p) / curv;
            if (std::abs(step) < 0.05 * (1.0 + std::abs(x))) x -= step;
        }
    }

    std::vector<StationaryPoint> pts;
    pts.reserve(xs.size());
    double vmin = INFINITY;
    for (double x : xs) {
        const double v = eval_potential(x, p);
        vmin = std::min(vmin, v);
        const double curv = d2V(x, p);
        PointKind kind;
        if (std::abs(curv) < 1e-8 * (1.0 + std::abs(p.b)))
            kind = PointKind::inflection;
        else
            kind = curv > 0.0 ? PointKind::local_min : PointKind::local_max;
        pts.push_back({x, v, kind});
    }
    for (auto& pt : pts) {
        if (pt.kind == PointKind::local_min && pt.v <= vmin + 1e-12 * (1.0 + std::abs(vmin)))
            pt.kind = PointKind::global_min;
    }
    return pts;
}

const char* to_string(PointKind k) {
    switch (k) {
        case PointKind::global_min: return "global_min";
        case PointKind::local_min: return "local_min";
        case PointKind::local_max: return "local_max";
        case PointKind::inflection: return "inflection";
    }
    return "?";
}

}  // namespace drabi::toy
