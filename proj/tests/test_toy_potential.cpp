#include "doctest.h"

#include <cmath>
#include <random>

#include "drabi/toy_potential.hpp"

using namespace drabi::toy;

TEST_CASE("potential evaluation") {
    CHECK(eval_potential(0.0, {1.0, 0.0}) == 0.0);
    CHECK(eval_potential(1.0, {-3.0, 0.8}) == doctest::Approx(-1.2).epsilon(1e-14));
    CHECK(eval_potential(-1.287, {-3.0, 0.8}) == doctest::Approx(-3.255).epsilon(1e-3));
}

TEST_CASE("critical coupling b_c = -(3/2) c^(2/3)") {
    CHECK(critical_coupling(0.0) == 0.0);
    CHECK(critical_coupling(0.8) == doctest::Approx(-1.29266).epsilon(1e-5));
    CHECK(critical_coupling(1.0) == doctest::Approx(-1.5).epsilon(1e-14));
}

TEST_CASE("symmetric double well, c = 0") {
    const auto pts = critical_points({-1.5, 0.0});
    REQUIRE(pts.size() == 3);
    const double r = std::sqrt(3.0) / 2.0;
    CHECK(pts[0].x == doctest::Approx(-r).epsilon(1e-12));
    CHECK(pts[0].kind == PointKind::global_min);
    CHECK(pts[1].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pts[1].kind == PointKind::local_max);
    CHECK(pts[2].x == doctest::Approx(r).epsilon(1e-12));
    CHECK(pts[2].kind == PointKind::global_min);
}

TEST_CASE("asymmetric single minimum, b=0 c=4/5") {
    const auto pts = critical_points({0.0, 0.8});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(-0.585).epsilon(2e-3));
    CHECK(pts[0].v == doctest::Approx(-0.351).epsilon(2e-3));
    CHECK(pts[0].kind == PointKind::global_min);
}

TEST_CASE("asymmetric triple, b=-3 c=4/5") {
    const auto pts = critical_points({-3.0, 0.8});
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].x == doctest::Approx(-1.287).epsilon(2e-3));
    CHECK(pts[0].v == doctest::Approx(-3.255).epsilon(2e-3));
    CHECK(pts[0].kind == PointKind::global_min);
    CHECK(pts[1].x == doctest::Approx(0.135).epsilon(2e-2));
    CHECK(pts[1].v == doctest::Approx(0.054).epsilon(2e-2));
    CHECK(pts[1].kind == PointKind::local_max);
    CHECK(pts[2].x == doctest::Approx(1.152).epsilon(2e-3));
    CHECK(pts[2].v == doctest::Approx(-1.298).epsilon(2e-3));
    CHECK(pts[2].kind == PointKind::local_min);
}

TEST_CASE("degenerate pair at b = b_c is an inflection") {
    const double c = 0.8;
    const auto pts = critical_points({critical_coupling(c), c});
    REQUIRE(pts.size() >= 2);
    int inflections = 0;
    for (const auto& p : pts) {
        if (p.kind == PointKind::inflection) {
            ++inflections;
            CHECK(std::abs(12.0 * p.x * p.x + 2.0 * critical_coupling(c)) < 1e-6);
        }
    }
    CHECK(inflections >= 1);
    // caption values of the touching pair
    bool found = false;
    for (const auto& p : pts)
        if (std::abs(p.x - 0.464) < 2e-3 && std::abs(p.v - 0.139) < 2e-3) found = true;
    CHECK(found);
    for (const auto& p : pts)
        if (p.kind == PointKind::global_min) {
            CHECK(p.x == doctest::Approx(-0.928).epsilon(2e-3));
            CHECK(p.v == doctest::Approx(-1.114).epsilon(2e-3));
        }
}

TEST_CASE("stationarity residual and count properties") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> ub(-4.0, 4.0), uc(0.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double b = ub(rng);
        const double c = uc(rng);
        const auto pts = critical_points({b, c});
        for (const auto& p : pts) {
            const double resid = 4.0 * p.x * p.x * p.x + 2.0 * b * p.x + c;
            CHECK(std::abs(resid) <=
                  1e-12 * (1.0 + std::abs(p.x * p.x * p.x)) + 1e-12 * (1 + std::abs(b) + c));
        }
        const double bc = critical_coupling(c);
        if (b > bc + 1e-6) CHECK(pts.size() == 1);
        if (b < bc - 1e-6) CHECK(pts.size() == 3);
    }
}

TEST_CASE("c=0 stationary set is symmetric under x -> -x") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ub(-4.0, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = critical_points({ub(rng), 0.0});
        for (const auto& p : pts) {
            bool mirrored = false;
            for (const auto& q : pts)
                if (std::abs(q.x + p.x) < 1e-10) mirrored = true;
            CHECK(mirrored);
        }
    }
}

TEST_CASE("fixed b=-1: varying c swaps the global minimum (first-order scenario)") {
    const auto neg = critical_points({-1.0, -0.1});
    const auto pos = critical_points({-1.0, 0.1});
    double x_neg = 0, x_pos = 0;
    for (const auto& p : neg)
        if (p.kind == PointKind::global_min) x_neg = p.x;
    for (const auto& p : pos)
        if (p.kind == PointKind::global_min) x_pos = p.x;
    CHECK(x_neg > 0.0);
    CHECK(x_pos < 0.0);
}
