#include <catch2/catch_amalgamated.hpp>

#include "dcf/conserved.hpp"
#include "dcf/dynamics.hpp"
#include "dcf/maps.hpp"

using namespace dcf;

TEST_CASE("rhs substitution examples") {
    PhysParams p;
    SECTION("transformed Kepler circular balance") {
        auto a = rhs(Frame::TransformedKepler, p, State{1, 0, 0, 1, 0});
        CHECK(a[0] == Catch::Approx(-1.0));
        CHECK(a[1] == Catch::Approx(0.0).margin(1e-15));
    }
    SECTION("transformed Kepler with damping shift") {
        p.lambda = 0.4;
        auto a = rhs(Frame::TransformedKepler, p, State{1, 0, 0, 0, 0});
        CHECK(a[0] == Catch::Approx(-0.96));
    }
    SECTION("sextic oscillator coefficient calE/(2 m c^2)") {
        FrameContext ctx;
        ctx.cal_E = 2.0;
        auto a = rhs(Frame::SexticOsc, p, State{1, 0, 0, 0, 0}, ctx);
        CHECK(a[0] == Catch::Approx(-16.0));
    }
    SECTION("collision singularity") {
        CHECK_THROWS_AS(rhs(Frame::DampedKepler, p, State{0, 0, 1, 0, 0}),
                        CollisionSingularity);
    }
}

TEST_CASE("circular orbit closes after one period") {
    PhysParams p;
    IntegratorConfig cfg;
    State ic{1.0, 0.0, 0.0, 1.0, 0.0};
    auto res = integrate(Frame::TransformedKepler, p, ic, 0.0, 2.0 * M_PI, cfg);
    const State end = res.trajectory.back();
    CHECK(std::abs(end.q1 - 1.0) < 1e-8);
    CHECK(std::abs(end.q2) < 1e-8);
}

TEST_CASE("damped circular orbit stays at r = 1 with v^2 = 1 - lambda^2/4") {
    PhysParams p;
    p.lambda = 0.4;
    IntegratorConfig cfg;
    State ic{1.0, 0.0, 0.0, std::sqrt(1.0 - 0.04), 0.0};
    auto res = integrate(Frame::TransformedKepler, p, ic, 0.0, 20.0, cfg);
    for (const auto& st : res.trajectory.samples) CHECK(std::abs(st.r() - 1.0) < 1e-7);
}

TEST_CASE("radial infall hits the r_min event") {
    PhysParams p;
    IntegratorConfig cfg;
    State ic{1.0, 0.0, 0.0, 0.0, 0.0};
    auto res = integrate(Frame::TransformedKepler, p, ic, 0.0, 10.0, cfg);
    CHECK(res.status == IntegrationStatus::EventHit);
    CHECK(res.trajectory.back().r() == Catch::Approx(cfg.r_min_event).epsilon(1e-6));
}

TEST_CASE("damped HO matches the closed-form solution") {
    PhysParams p;
    p.lambda = 0.3;
    IntegratorConfig cfg;
    State ic{1.0, 0.0, -0.15, 0.0, 0.0};  // q = e^{-lambda t/2} cos(wt) branch
    const double wt = p.omega_tilde();
    auto res = integrate(Frame::DampedHO, p, ic, 0.0, 15.0, cfg);
    for (const auto& st : res.trajectory.samples) {
        const double expect = std::exp(-0.5 * p.lambda * st.s) * std::cos(wt * st.s);
        CHECK(st.q1 == Catch::Approx(expect).margin(1e-8));
    }
}

TEST_CASE("regularized flow: radial solution and monotone physical time") {
    PhysParams p;
    FrameContext ctx;
    ctx.cal_E = 2.0;  // omega0^2 = calE/(2 m c^2) = 16
    IntegratorConfig cfg;
    State u0{1.0, 0.0, 0.0, 0.0, 0.0};
    auto reg = integrate_regularized(p, u0, 0.0, 0.0, 3.0, cfg, ctx);
    const double w0 = 4.0;
    for (std::size_t i = 0; i < reg.trajectory.size(); ++i) {
        const auto& st = reg.trajectory.samples[i];
        CHECK(st.q1 == Catch::Approx(std::cos(w0 * st.s)).margin(1e-8));
        if (i > 0) CHECK(reg.physical_time[i] >= reg.physical_time[i - 1]);
    }
}

TEST_CASE("regularized collision orbit passes through U = 0 with bounded steps") {
    PhysParams p;
    State z_ic{1.0, 0.0, 0.0, 0.0, 0.0};  // L = 0 infall image
    FrameContext ctx;
    ctx.cal_E = cal_E(z_ic, p);
    State u0 = levi_civita_inverse(z_ic, p.c, 0.0);
    IntegratorConfig cfg;
    auto reg = integrate_regularized(p, u0, 0.0, 0.0, 4.0, cfg, ctx);
    bool crossed = false;
    double prev = reg.trajectory.samples.front().q1;
    for (const auto& st : reg.trajectory.samples) {
        if (st.q1 * prev < 0.0) crossed = true;
        prev = st.q1;
    }
    CHECK(crossed);
    CHECK(reg.n_steps < 10000);
}

TEST_CASE("tolerance halving improves the end state") {
    PhysParams p;
    State ic{1.0, 0.0, 0.0, 0.9, 0.0};
    auto end_err = [&](double tol) {
        IntegratorConfig cfg;
        cfg.rel_tol = cfg.abs_tol = tol;
        IntegratorConfig tight;
        tight.rel_tol = tight.abs_tol = 1e-13;
        auto a = integrate(Frame::TransformedKepler, p, ic, 0.0, 25.0, cfg);
        auto b = integrate(Frame::TransformedKepler, p, ic, 0.0, 25.0, tight);
        return std::abs(a.trajectory.back().pos() - b.trajectory.back().pos());
    };
    CHECK(end_err(1e-6) > 2.0 * end_err(5e-7));
}

TEST_CASE("time reversal returns the initial state") {
    PhysParams p;
    p.lambda = 0.1;
    IntegratorConfig cfg;
    cfg.rel_tol = cfg.abs_tol = 1e-12;
    State ic{1.0, 0.0, 0.0, 1.02, 0.0};
    auto fwd = integrate(Frame::TransformedKepler, p, ic, 0.0, 18.0, cfg);
    auto back = integrate(Frame::TransformedKepler, p, fwd.trajectory.back(), 18.0, 0.0, cfg);
    CHECK(std::abs(back.trajectory.back().pos() - ic.pos()) < 1e-9);
    CHECK(std::abs(back.trajectory.back().vel() - ic.vel()) < 1e-9);
}

TEST_CASE("config validation") {
    IntegratorConfig cfg;
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    PhysParams p;
    p.m = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("derived constants") {
    PhysParams p;
    CHECK(p.omega0(0.125) == Catch::Approx(1.0));
    CHECK(p.omega_tilde() == Catch::Approx(1.0));
    p.lambda = 2.0;
    CHECK_THROWS_AS(p.omega_tilde(), OverdampedRegime);
    CHECK_THROWS_AS(p.omega0(-1.0), NonpositiveEnergy);
    p.lambda = 0.0;
    auto d = derive_constants(p, 0.125);
    CHECK(d.omega0 == Catch::Approx(1.0));
    CHECK(d.alpha == Catch::Approx(1.0));
    CHECK(d.beta == Catch::Approx(0.5));
}
