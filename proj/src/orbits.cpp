#include "drabi/orbits.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "drabi/errors.hpp"

namespace drabi::orbits {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kQuadTol = 1e-10;
constexpr int kQuadDepth = 12;

// H(p,q) = A p^2 + U(q), A = w/w0. Orbit domain at energy eps: {q : U(q) <= eps}.
double potential(double q, const ModelParams& mp) {
    return classical::energy(0.0, q, mp);
}

struct Interval {
    double lo, hi;  // turning points, U(lo) = U(hi) = eps
};

// U is monotone between stationary points: bracketed bisection is exact.
double turning_in(double a, double b, double eps, const ModelParams& mp) {
    double fa = potential(a, mp) - eps;
    for (int it = 0; it < 120; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = potential(m, mp) - eps;
        if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; } else { b = m; }
        if (b - a <= 1e-15 * (1.0 + std::abs(a))) break;
    }
    return 0.5 * (a + b);
}

// Connected components of the orbit domain, ascending, via the landmark
// structure of U (monotone on each segment between stationary points).
std::vector<Interval> orbit_intervals(double eps, const ModelParams& mp,
                                      const classical::CriticalSet& cs) {
    std::vector<double> lm;  // stationary points of U
    for (const auto& sp : cs.points) lm.push_back(sp.q);
    std::sort(lm.begin(), lm.end());

    std::vector<double> roots;
    // outer-left root: U decreases toward lm.front()
    if (potential(lm.front(), mp) < eps) {
        double a = lm.front() - 1.0, span = 1.0;
        while (potential(a, mp) < eps) { span *= 2.0; a = lm.front() - span; }
        roots.push_back(turning_in(a, lm.front(), eps, mp));
    }
    for (size_t i = 0; i + 1 < lm.size(); ++i) {
        const double ua = potential(lm[i], mp) - eps;
        const double ub = potential(lm[i + 1], mp) - eps;
        if ((ua < 0.0) != (ub < 0.0)) roots.push_back(turning_in(lm[i], lm[i + 1], eps, mp));
    }
    if (potential(lm.back(), mp) < eps) {
        double b = lm.back() + 1.0, span = 1.0;
        while (potential(b, mp) < eps) { span *= 2.0; b = lm.back() + span; }
        roots.push_back(turning_in(lm.back(), b, eps, mp));
    }

    std::vector<Interval> out;
    for (size_t i = 0; i + 1 < roots.size(); i += 2) out.push_back({roots[i], roots[i + 1]});
    return out;
}

// Interior split points keep the adaptive quadrature away from the
// separatrix pinch at q_c and the second-well shoulder.
std::vector<double> split_points(const Interval& iv, const classical::CriticalSet& cs) {
    std::vector<double> s;
    for (const auto& sp : cs.points)
        if (sp.q > iv.lo + 1e-12 && sp.q < iv.hi - 1e-12) s.push_back(sp.q);
    std::sort(s.begin(), s.end());
    return s;
}

double p_of_q(double eps, double q, const ModelParams& mp) {
    return std::sqrt(std::max(p_squared(eps, q, mp), 0.0));
}

// integral of f over one half-branch with the turning-point substitution
// q = q_turn +- s^2; `weight` maps (p, s) to the transformed integrand.
template <class Weight>
double half_branch(double eps, const ModelParams& mp, double turn, double inner,
                   Weight weight) {
    const double sign = inner > turn ? 1.0 : -1.0;
    const double smax = std::sqrt(std::abs(inner - turn));
    auto f = [&](double s) { return weight(p_of_q(eps, turn + sign * s * s, mp), s); };
    return gauss_kronrod<double, 31>::integrate(f, 0.0, smax, kQuadDepth, kQuadTol);
}

template <class Fn>
double smooth_piece(double a, double b, Fn f) {
    return gauss_kronrod<double, 31>::integrate(f, a, b, kQuadDepth, kQuadTol);
}

double inv_p_weight(double p, double s) { return p > 0.0 ? 2.0 * s / p : 0.0; }
double p_weight(double p, double s) { return 2.0 * s * p; }

double integrate_branch_inv_p(double eps, const ModelParams& mp, const Interval& iv,
                              const std::vector<double>& splits) {
    const double m1 = splits.empty() ? 0.5 * (iv.lo + iv.hi) : splits.front();
    const double m2 = splits.empty() ? m1 : splits.back();
    double total = half_branch(eps, mp, iv.lo, m1, inv_p_weight) +
                   half_branch(eps, mp, iv.hi, m2, inv_p_weight);
    auto f = [&](double q) { return 1.0 / std::max(p_of_q(eps, q, mp), 1e-150); };
    for (size_t i = 0; i + 1 < splits.size(); ++i)
        total += smooth_piece(splits[i], splits[i + 1], f);
    return total;
}

double integrate_branch_p(double eps, const ModelParams& mp, const Interval& iv,
                          const std::vector<double>& splits) {
    const double m1 = splits.empty() ? 0.5 * (iv.lo + iv.hi) : splits.front();
    const double m2 = splits.empty() ? m1 : splits.back();
    double total = half_branch(eps, mp, iv.lo, m1, p_weight) +
                   half_branch(eps, mp, iv.hi, m2, p_weight);
    auto f = [&](double q) { return p_of_q(eps, q, mp); };
    for (size_t i = 0; i + 1 < splits.size(); ++i)
        total += smooth_piece(splits[i], splits[i + 1], f);
    return total;
}

Interval select_interval(const std::vector<Interval>& ivs, Well well,
                         const classical::CriticalSet& cs, double eps) {
    if (ivs.empty())
        throw EmptyBranch("no classical orbit at eps=" + std::to_string(eps));
    if (ivs.size() == 1) {
        if (well == Well::right) {
            if (!cs.eps_c1 || eps < *cs.eps_c1)
                throw EmptyBranch("right well does not exist at eps=" + std::to_string(eps));
            throw EmptyBranch("wells are merged at eps=" + std::to_string(eps));
        }
        if (well == Well::left && cs.eps_c2 && eps > *cs.eps_c2)
            throw EmptyBranch("wells are merged at eps=" + std::to_string(eps));
        return ivs.front();
    }
    if (well == Well::joined)
        throw EmptyBranch("phase space is disconnected at eps=" + std::to_string(eps));
    return well == Well::left ? ivs.front() : ivs.back();
}

}  // namespace

double p_squared(double eps, double q, const ModelParams& mp) {
    const double s = std::sqrt(1.0 + 2.0 * mp.omega * mp.g * mp.g * q * q / mp.omega0);
    return (mp.omega0 / mp.omega) * (eps + s - 2.0 * mp.alpha * q / std::sqrt(mp.omega0)) -
           q * q;
}

MomentumBranch momentum_branch(double eps, const ModelParams& mp, Well well, int n_grid) {
    mp.validate();
    const auto cs = classical::critical_set(mp);
    if (eps < cs.eps_gs - 1e-12 * (1.0 + std::abs(cs.eps_gs)))
        throw EmptyBranch("eps below the ground-state energy");

    MomentumBranch br;
    br.eps = eps;
    br.well = well;

    // degenerate orbit at the well bottom
    if (eps <= cs.eps_gs + 1e-13 * (1.0 + std::abs(cs.eps_gs))) {
        double q0 = cs.points.front().q;
        for (const auto& sp : cs.points)
            if (sp.kind == classical::StatKind::global_min) q0 = sp.q;
        br.q_grid = {q0};
        br.p_values = {0.0};
        br.turning_points = {q0, q0};
        return br;
    }

    const auto ivs = orbit_intervals(eps, mp, cs);
    const Interval iv = select_interval(ivs, well, cs, eps);
    br.turning_points = {iv.lo, iv.hi};
    br.q_grid.resize(n_grid);
    br.p_values.resize(n_grid);
    for (int i = 0; i < n_grid; ++i) {
        const double q = iv.lo + (iv.hi - iv.lo) * (i + 0.5) / n_grid;
        br.q_grid[i] = q;
        br.p_values[i] = p_of_q(eps, q, mp);
    }
    return br;
}

double level_density(double eps, const ModelParams& mp) {
    mp.validate();
    const auto cs = classical::critical_set(mp);
    if (eps <= cs.eps_gs) throw SingularEnergy("eps at or below the ground state");
    const double tol = 1e-11 * (1.0 + std::abs(eps));
    if (cs.eps_c1 && std::abs(eps - *cs.eps_c1) < tol)
        throw SingularEnergy("level density singular at eps_c1");
    if (cs.eps_c2 && std::abs(eps - *cs.eps_c2) < tol)
        throw SingularEnergy("level density singular at eps_c2");

    double total = 0.0;
    for (const auto& iv : orbit_intervals(eps, mp, cs))
        total += integrate_branch_inv_p(eps, mp, iv, split_points(iv, cs));
    return total / (2.0 * M_PI);
}

double ebk_action(double eps, const ModelParams& mp, Well well) {
    mp.validate();
    const auto cs = classical::critical_set(mp);
    if (eps <= cs.eps_gs + 1e-14 * (1.0 + std::abs(cs.eps_gs))) return 0.0;
    const auto ivs = orbit_intervals(eps, mp, cs);
    const Interval iv = select_interval(ivs, well, cs, eps);
    return 2.0 * integrate_branch_p(eps, mp, iv, split_points(iv, cs));
}

std::vector<double> ebk_levels(const ModelParams& mp, Well well, int n_max) {
    mp.validate();
    const auto cs = classical::critical_set(mp);

    double eps_bottom, eps_top;
    if (well == Well::left) {
        eps_bottom = cs.eps_gs;
        eps_top = cs.eps_c2 ? *cs.eps_c2 : INFINITY;
    } else if (well == Well::right) {
        if (!cs.eps_c1 || !cs.eps_c2 || *cs.eps_c2 - *cs.eps_c1 < 1e-12)
            throw EmptyBranch("right well does not exist at these parameters");
        eps_bottom = *cs.eps_c1;
        eps_top = *cs.eps_c2;
    } else {
        throw EmptyBranch("ebk_levels quantizes a single well (left or right)");
    }

    double hi;
    double action_top;
    if (std::isfinite(eps_top)) {
        hi = eps_top - 1e-11 * (1.0 + std::abs(eps_top));
        action_top = ebk_action(hi, mp, well);
    } else {
        hi = eps_bottom + 1.0;
        action_top = INFINITY;
    }

    std::vector<double> levels;
    const double shift = mp.omega / mp.omega0;
    for (int n = 0; n <= n_max; ++n) {
        const double target = 2.0 * M_PI * (n + 0.5);
        if (target > action_top)
            throw WellCeiling("EBK level n=" + std::to_string(n) +
                              " exceeds the well capacity");
        if (!std::isfinite(eps_top))
            while (ebk_action(hi, mp, well) < target)
                hi = eps_bottom + 2.0 * (hi - eps_bottom);

        // action is strictly increasing in eps: bisection
        double a = eps_bottom + 1e-13 * (1.0 + std::abs(eps_bottom));
        double b = hi;
        for (int it = 0; it < 100; ++it) {
            const double m = 0.5 * (a + b);
            if (ebk_action(m, mp, well) < target) a = m; else b = m;
            if (b - a <= 1e-12 * (1.0 + std::abs(b))) break;
        }
        levels.push_back(0.5 * (a + b) - shift);
    }
    return levels;
}

int suggest_n_ph(const ModelParams& mp, double eps_top) {
    mp.validate();
    const auto cs = classical::critical_set(mp);
    const double eps = std::max(eps_top, cs.eps_gs + 1e-6);
    double n_cl = 1.0;
    for (const auto& iv : orbit_intervals(eps, mp, cs)) {
        const int n = 400;
        for (int i = 0; i <= n; ++i) {
            const double q = iv.lo + (iv.hi - iv.lo) * i / n;
            const double p2 = std::max(p_squared(eps, q, mp), 0.0);
            n_cl = std::max(n_cl, 0.5 * (p2 + q * q));
        }
    }
    return static_cast<int>(std::ceil(n_cl + 10.0 * std::cbrt(n_cl) + 60.0));
}

const char* to_string(Well w) {
    switch (w) {
        case Well::left: return "left";
        case Well::right: return "right";
        case Well::joined: return "joined";
    }
    return "?";
}

}  // namespace drabi::orbits
