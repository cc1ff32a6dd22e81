#include <catch2/catch_amalgamated.hpp>

#include "dcf/conserved.hpp"
#include "dcf/dynamics.hpp"
#include "dcf/maps.hpp"

using namespace dcf;

TEST_CASE("calE substitution example") {
    PhysParams p;  // m = k = 1, lambda = 0
    State st{1.0, 0.0, 0.0, 1.0, 0.0};
    CHECK(cal_E(st, p) == Catch::Approx(0.5));
    CHECK_THROWS_AS(cal_E(State{0, 0, 1, 0, 0}, p), CollisionSingularity);
}

TEST_CASE("calE reduces to minus the Kepler energy at lambda = 0") {
    PhysParams p;
    State st{0.7, -0.3, 0.4, 1.1, 0.0};
    const double kepler = 0.5 * (st.v1 * st.v1 + st.v2 * st.v2) - 1.0 / st.r();
    CHECK(cal_E(st, p) == Catch::Approx(-kepler));
}

TEST_CASE("angular momentum") {
    PhysParams p;
    CHECK(angular_momentum(State{1, 0, 0, 1, 0}, p) == 1.0);
    // radial infall is exactly L = 0
    CHECK(angular_momentum(State{0.3, 0.0, -2.0, 0.0, 0.0}, p) == 0.0);
}

TEST_CASE("frame Hamiltonians") {
    PhysParams p;
    CHECK(hamiltonian(Frame::ShiftedHO, State{1, 0, 0, 0, 0}, p) == Catch::Approx(0.5));
    CHECK(hamiltonian(Frame::SexticOsc, State{0, 0, 1, 0, 0}, p, 2.0) ==
          Catch::Approx(0.5));
    CHECK_THROWS_AS(hamiltonian(Frame::DampedKepler, State{1, 0, 0, 0, 0}, p),
                    FrameMismatch);
}

TEST_CASE("calE agrees between TransformedKepler and its Levi-Civita image") {
    PhysParams p;
    p.lambda = 0.1;
    for (auto& z : {State{1.2, 0.3, -0.2, 0.8, 0.0}, State{0.5, -0.9, 1.0, 0.1, 0.0}}) {
        const State u = levi_civita_inverse(z, p.c, 0.0);
        CHECK(cal_E_from_sextic(u, p) == Catch::Approx(cal_E(z, p)).epsilon(1e-10));
    }
}

TEST_CASE("conserved drift along integrated trajectories") {
    PhysParams p;
    IntegratorConfig cfg;
    SECTION("transformed Kepler, lambda = 0.1") {
        p.lambda = 0.1;
        State ic{1.0, 0.0, 0.0, 1.05, 0.0};
        auto res = integrate(Frame::TransformedKepler, p, ic, 0.0, 40.0, cfg);
        double lo_e = 1e99, hi_e = -1e99, lo_l = 1e99, hi_l = -1e99;
        for (const auto& d : res.trajectory.diagnostics) {
            lo_e = std::min(lo_e, d[0]); hi_e = std::max(hi_e, d[0]);
            lo_l = std::min(lo_l, d[1]); hi_l = std::max(hi_l, d[1]);
        }
        CHECK(hi_e - lo_e < 1e-8);
        CHECK(hi_l - lo_l < 1e-8);
    }
    SECTION("shifted HO energy constant to 1e-10") {
        p.lambda = 0.3;
        cfg.rel_tol = cfg.abs_tol = 1e-12;
        State ic{1.0, 0.2, 0.0, 0.6, 0.0};
        auto res = integrate(Frame::ShiftedHO, p, ic, 0.0, 40.0, cfg);
        double lo = 1e99, hi = -1e99;
        for (const auto& d : res.trajectory.diagnostics) {
            lo = std::min(lo, d[0]); hi = std::max(hi, d[0]);
        }
        CHECK(hi - lo < 1e-10);
    }
}

TEST_CASE("Bohlin-frame Kepler energy identity") {
    PhysParams p;
    p.lambda = 0.4;
    CHECK(identify_kepler_energy(1.0, 1.0, 0.4) == Catch::Approx(-0.12));
    // mapped samples carry E_Kepler = -(m/8)(Omega^2 - lambda^2/4)
    State w{1.0, 0.0, 0.0, p.omega_tilde(), 0.0};  // circular shifted orbit
    const double E = hamiltonian(Frame::ShiftedHO, w, p);
    const State z = bohlin_map(w, 0.0);
    CHECK(kepler_energy(z, p, identify_kepler_strength(E)) ==
          Catch::Approx(identify_kepler_energy(p.m, p.Omega, p.lambda)).epsilon(1e-12));
}
