#include "doctest.h"

#include <cmath>

#include "drabi/classical.hpp"

using namespace drabi;
using namespace drabi::classical;

namespace {
ModelParams params(double omega0, double g, double alpha) {
    ModelParams mp;
    mp.omega = 1.0;
    mp.omega0 = omega0;
    mp.g = g;
    mp.alpha = alpha;
    return mp;
}
}  // namespace

TEST_CASE("classical energy at the origin is -1") {
    CHECK(energy(0.0, 0.0, params(100, 1.3, 0.5)) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(energy(0.0, 0.0, params(7, 0.0, 0.0)) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("g=0 minimum: displaced oscillator, eps = -1 - alpha^2/omega") {
    const auto cs = critical_set(params(300, 0.0, 0.5));
    CHECK(cs.eps_gs == doctest::Approx(-1.25).epsilon(1e-12));
    CHECK_FALSE(cs.has_esqpt());
}

TEST_CASE("alpha=0 closed forms across g") {
    SUBCASE("normal phase, single point at eps=-1") {
        const auto cs = critical_set(params(50, 0.5, 0.0));
        CHECK(cs.points.size() == 1);
        CHECK(cs.eps_gs == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK_FALSE(cs.eps_c1.has_value());
        CHECK_FALSE(cs.eps_c2.has_value());
    }
    SUBCASE("superradiant phase: eps_gs=-(1+g^4)/2g^2 and eps_c=-1 to 1e-10") {
        for (double g = 1.1; g <= 3.0 + 1e-9; g += 0.1) {
            const auto cs = critical_set(params(80, g, 0.0));
            const double expect = -(1.0 + g * g * g * g) / (2.0 * g * g);
            CHECK(std::abs(cs.eps_gs - expect) < 1e-10);
            REQUIRE(cs.eps_c2.has_value());
            CHECK(std::abs(*cs.eps_c2 + 1.0) < 1e-10);
            CHECK(std::abs(*cs.q_c) < 1e-7);
        }
    }
    SUBCASE("explicit example g=2: eps_gs = -2.125") {
        CHECK(critical_set(params(40, 2.0, 0.0)).eps_gs ==
              doctest::Approx(-2.125).epsilon(1e-12));
    }
}

TEST_CASE("g_star") {
    CHECK(g_star(0.0, params(10, 0, 0)) == 1.0);
    const double gs = g_star(0.5, params(100, 0, 0.5));
    CHECK(gs == doctest::Approx(1.7872).epsilon(1e-3 / 1.7872));

    SUBCASE("unique transition point: counts bracket it") {
        auto count_at = [&](double g) {
            return critical_set(params(100, g, 0.5)).points.size();
        };
        CHECK(count_at(gs * (1.0 - 1e-5)) == 1);
        CHECK(count_at(gs * (1.0 + 1e-5)) == 3);
    }
}

TEST_CASE("critical energies, alpha = 1/2 paper anchors") {
    const double gs = g_star(0.5, params(300, 0, 0.5));

    SUBCASE("g = 2 g*: eps_c1 = -4.1596, eps_c2 = -0.9784") {
        const auto cs = critical_set(params(300, 2.0 * gs, 0.5));
        REQUIRE(cs.eps_c1.has_value());
        REQUIRE(cs.eps_c2.has_value());
        CHECK(*cs.eps_c1 == doctest::Approx(-4.1596).epsilon(2e-3 / 4.1596));
        CHECK(*cs.eps_c2 == doctest::Approx(-0.9784).epsilon(2e-3 / 0.9784));
        CHECK(cs.eps_gs < *cs.eps_c1);
        REQUIRE(cs.q_c.has_value());
        CHECK(*cs.q_c > cs.points.front().q);
    }
    SUBCASE("g = 1.65 g*: eps_c1 = -2.5886, eps_c2 = -0.9668") {
        const auto cs = critical_set(params(300, 1.65 * gs, 0.5));
        REQUIRE(cs.has_esqpt());
        CHECK(*cs.eps_c1 == doctest::Approx(-2.5886).epsilon(2e-3 / 2.5886));
        CHECK(*cs.eps_c2 == doctest::Approx(-0.9668).epsilon(2e-3 / 0.9668));
    }
    SUBCASE("g = g*: degenerate pair at -0.8620") {
        const auto cs = critical_set(params(300, gs, 0.5));
        REQUIRE(cs.eps_c1.has_value());
        REQUIRE(cs.eps_c2.has_value());
        CHECK(*cs.eps_c1 == doctest::Approx(*cs.eps_c2).epsilon(1e-6));
        CHECK(*cs.eps_c1 == doctest::Approx(-0.8620).epsilon(2e-3 / 0.8620));
    }
}

TEST_CASE("critical energies are independent of omega0") {
    const double gs = g_star(0.5, params(1, 0, 0.5));
    for (double w0 : {10.0, 40.0, 300.0}) {
        const auto cs = critical_set(params(w0, 2.0 * gs, 0.5));
        const auto ref = critical_set(params(100.0, 2.0 * gs, 0.5));
        CHECK(std::abs(cs.eps_gs - ref.eps_gs) < 1e-9);
        CHECK(std::abs(*cs.eps_c1 - *ref.eps_c1) < 1e-9);
        CHECK(std::abs(*cs.eps_c2 - *ref.eps_c2) < 1e-9);
    }
}

TEST_CASE("stationary points satisfy dH/dq = 0 and the eps ordering invariant") {
    const double gs = g_star(0.5, params(100, 0, 0.5));
    for (double gfac : {0.7, 1.0, 1.3, 1.9, 2.5}) {
        const auto mp = params(140, gfac * gs, 0.5);
        const auto cs = critical_set(mp);
        for (const auto& sp : cs.points)
            CHECK(std::abs(dH_dq(sp.q, mp)) < 1e-9);
        if (cs.eps_c1) {
            CHECK(cs.eps_gs <= *cs.eps_c1 + 1e-12);
            CHECK(*cs.eps_c1 <= *cs.eps_c2 + 1e-12);
        }
        CHECK((gfac > 1.0) == cs.eps_c2.has_value());
    }
}
