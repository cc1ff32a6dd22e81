#include <catch2/catch_amalgamated.hpp>

#include "dcf/maps.hpp"

using namespace dcf;

TEST_CASE("point map substitution at t = 0") {
    State st{1.0, 0.0, 0.0, 1.0, 0.0};
    State m = point_map_kepler(st, 0.4);
    CHECK(m.q1 == 1.0);
    CHECK(m.q2 == 0.0);
    CHECK(m.v1 == Catch::Approx(0.2));
    CHECK(m.v2 == Catch::Approx(1.0));
    CHECK(m.s == 0.0);
}

TEST_CASE("point map is the identity at lambda = 0") {
    State st{0.3, -0.8, 1.1, 0.2, 5.0};
    State m = point_map_kepler(st, 0.0);
    CHECK(m.q1 == st.q1);
    CHECK(m.v1 == st.v1);
    CHECK(m.v2 == st.v2);
}

TEST_CASE("point map round trip") {
    State st{0.3, -0.8, 1.1, 0.2, 2.7};
    for (double lam : {0.0, 0.05, 0.4}) {
        State back = point_map_kepler_inverse(point_map_kepler(st, lam), lam);
        CHECK(back.q1 == Catch::Approx(st.q1).margin(1e-14));
        CHECK(back.q2 == Catch::Approx(st.q2).margin(1e-14));
        CHECK(back.v1 == Catch::Approx(st.v1).margin(1e-14));
        CHECK(back.v2 == Catch::Approx(st.v2).margin(1e-14));
        State back2 = ho_point_map_inverse(ho_point_map(st, lam), lam);
        CHECK(back2.v1 == Catch::Approx(st.v1).margin(1e-14));
    }
}

TEST_CASE("Levi-Civita squaring") {
    State u = make_state({1.0, 1.0}, {0.0, 0.0}, 0.0);
    State z = levi_civita_forward(u, 0.25, 0.0);
    CHECK(z.q1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(z.q2 == Catch::Approx(2.0));

    const Complex u2 = std::polar(1.0, M_PI / 4.0);
    State z2 = levi_civita_forward(make_state(u2, {0.1, 0.0}, 0.0), 0.25, 0.0);
    CHECK(z2.q1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(z2.q2 == Catch::Approx(1.0));
}

TEST_CASE("Levi-Civita inverse: angle halving and branch tracking") {
    // Z making a full loop -> U makes half a loop, continuity-tracked
    Complex prev_u;
    bool first = true;
    for (int i = 0; i <= 40; ++i) {
        const double phi = 2.0 * M_PI * i / 40.0;
        const State z = make_state(std::polar(1.0, phi), {0.0, 0.1}, 0.0);
        State u = first ? levi_civita_inverse(z, 0.25, 0.0)
                        : levi_civita_inverse(z, 0.25, 0.0, &prev_u);
        if (!first) CHECK(std::abs(u.pos() - prev_u) < 0.2);  // smooth continuation
        prev_u = u.pos();
        first = false;
        CHECK(std::abs(u.pos() * u.pos() - z.pos()) < 1e-12);
    }
    // after the full Z loop, U has rotated by pi (opposite sign of the start)
    CHECK(prev_u.real() == Catch::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("Levi-Civita round trip of velocities") {
    const double c = 0.25;
    State z = make_state({0.8, -0.4}, {0.3, 0.9}, 1.5);
    State u = levi_civita_inverse(z, c, 0.0);
    State z2 = levi_civita_forward(u, c, 1.5);
    CHECK(z2.q1 == Catch::Approx(z.q1).margin(1e-13));
    CHECK(z2.q2 == Catch::Approx(z.q2).margin(1e-13));
    CHECK(z2.v1 == Catch::Approx(z.v1).margin(1e-13));
    CHECK(z2.v2 == Catch::Approx(z.v2).margin(1e-13));
}

TEST_CASE("Levi-Civita singular points") {
    CHECK_THROWS_AS(levi_civita_forward(make_state({0, 0}, {1, 0}, 0), 0.25, 0.0),
                    OriginSingularity);
    CHECK_THROWS_AS(levi_civita_inverse(make_state({0, 0}, {1, 0}, 0), 0.25, 0.0),
                    BranchAmbiguity);
}

TEST_CASE("Bohlin map squaring and time rate") {
    State w = make_state({1.0, 1.0}, {0.0, 0.0}, 0.0);
    State z = bohlin_map(w, 0.0);
    CHECK(z.q1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(z.q2 == Catch::Approx(2.0));
    CHECK(bohlin_time_rate(w) == Catch::Approx(8.0));
    CHECK_THROWS_AS(bohlin_map(make_state({0, 0}, {1, 0}, 0), 0.0), OriginSingularity);
}

TEST_CASE("parameter identifications") {
    CHECK(identify_energy_from_omega0(1.0, 2.0) == Catch::Approx(-0.5));
    CHECK(identify_kepler_strength(4.0) == Catch::Approx(1.0));
    CHECK(identify_kepler_energy(1.0, 1.0, 0.4) == Catch::Approx(-0.12));
}

TEST_CASE("angle relations on samples: arg Z = 2 arg U, |Z| = |U|^2") {
    for (double a : {0.3, 1.1, 2.9, -2.0}) {
        const Complex U = std::polar(1.7, a);
        const State z = levi_civita_forward(make_state(U, {0.2, -0.1}, 0.0), 0.25, 0.0);
        CHECK(std::abs(z.pos()) == Catch::Approx(std::norm(U)).epsilon(1e-13));
        const double want = std::remainder(2.0 * a, 2.0 * M_PI);
        CHECK(std::remainder(std::arg(z.pos()) - want, 2.0 * M_PI) ==
              Catch::Approx(0.0).margin(1e-12));
    }
}
