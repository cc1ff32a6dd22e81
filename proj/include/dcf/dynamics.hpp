#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "dcf/conserved.hpp"
#include "dcf/errors.hpp"
#include "dcf/ode.hpp"
#include "dcf/params.hpp"
#include "dcf/state.hpp"

namespace dcf {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    double initial_step = 0.0;
    double r_min_event = 1e-6;  // collision proximity, unregularized Kepler frames
    bool dense_output = true;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ConfigError("rel_tol must be in (0,1)");
        if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw ConfigError("abs_tol must be in (0,1)");
        if (r_min_event < 0.0) throw ConfigError("r_min_event must be >= 0");
    }

    ode::Options ode_options() const {
        ode::Options o;
        o.rel_tol = rel_tol;
        o.abs_tol = abs_tol;
        o.max_step = max_step;
        o.initial_step = initial_step;
        return o;
    }
};

// Frame constants that do not live in PhysParams: the conserved calE that
// parametrizes the sextic oscillator, and the Kepler coupling E/4 for the
// Bohlin frame (0 = use params.k).
struct FrameContext {
    double cal_E = 0.0;
    double bohlin_k = 0.0;

    double kepler_coupling(const PhysParams& p) const {
        return bohlin_k != 0.0 ? bohlin_k : p.k;
    }
};

// Acceleration of the frame's equation of motion at (state, time).
inline std::array<double, 2> rhs(Frame frame, const PhysParams& p, const State& st,
                                 const FrameContext& ctx = {}) {
    const double q1 = st.q1, q2 = st.q2;
    switch (frame) {
        case Frame::DampedKepler: {
            const double r = st.r();
            if (r <= 0.0) throw CollisionSingularity("rhs: r = 0 in damped Kepler");
            const double coef =
                p.k * std::exp(-1.5 * p.lambda * st.s) / (p.m * r * r * r);
            return {-p.lambda * st.v1 - coef * q1, -p.lambda * st.v2 - coef * q2};
        }
        case Frame::TransformedKepler: {
            const double r = st.r();
            if (r <= 0.0) throw CollisionSingularity("rhs: r = 0 in transformed Kepler");
            const double coef = p.k / (p.m * r * r * r);
            const double sh = 0.25 * p.lambda * p.lambda;
            return {sh * q1 - coef * q1, sh * q2 - coef * q2};
        }
        case Frame::SexticOsc: {
            const double r2 = (q1 * q1 + q2 * q2) * (q1 * q1 + q2 * q2);
            const double coef = (ctx.cal_E / p.m - 0.375 * p.lambda * p.lambda * r2) /
                                (2.0 * p.c * p.c);
            return {-coef * q1, -coef * q2};
        }
        case Frame::DampedHO:
            return {-p.lambda * st.v1 - p.Omega * p.Omega * q1,
                    -p.lambda * st.v2 - p.Omega * p.Omega * q2};
        case Frame::ShiftedHO: {
            const double wt2 = p.Omega * p.Omega - 0.25 * p.lambda * p.lambda;
            return {-wt2 * q1, -wt2 * q2};
        }
        case Frame::BohlinKepler: {
            const double r = st.r();
            if (r <= 0.0) throw CollisionSingularity("rhs: r = 0 in Bohlin Kepler");
            const double coef = ctx.kepler_coupling(p) / (p.m * r * r * r);
            return {-coef * q1, -coef * q2};
        }
    }
    return {0.0, 0.0};
}

enum class IntegrationStatus { Ok, EventHit, StepCollapse };

struct IntegrationResult {
    Trajectory trajectory;
    IntegrationStatus status = IntegrationStatus::Ok;
    double event_time = 0.0;
    std::size_t n_steps = 0, n_rejected = 0;
    ode::Solution raw;  // dense output for matched-time comparisons
    FrameContext context;

    State eval(double s) const {
        std::vector<double> y;
        raw.eval(s, y);
        return State{y[0], y[1], y[2], y[3], s};
    }
};

namespace detail {

inline std::array<double, 2> frame_diagnostics(Frame frame, const PhysParams& p,
                                               const State& st, const FrameContext& ctx) {
    switch (frame) {
        case Frame::DampedKepler: {
            // calE and L of the point-mapped image are the conserved pair
            const double e = std::exp(0.5 * p.lambda * st.s);
            State mapped{st.q1 * e, st.q2 * e,
                         (st.v1 + 0.5 * p.lambda * st.q1) * e,
                         (st.v2 + 0.5 * p.lambda * st.q2) * e, st.s};
            return {cal_E(mapped, p), angular_momentum(mapped, p)};
        }
        case Frame::TransformedKepler:
            return {cal_E(st, p), angular_momentum(st, p)};
        case Frame::SexticOsc:
            return {hamiltonian(frame, st, p, ctx.cal_E), angular_momentum(st, p)};
        case Frame::DampedHO: {
            const double e = std::exp(0.5 * p.lambda * st.s);
            State mapped{st.q1 * e, st.q2 * e,
                         (st.v1 + 0.5 * p.lambda * st.q1) * e,
                         (st.v2 + 0.5 * p.lambda * st.q2) * e, st.s};
            return {hamiltonian(Frame::ShiftedHO, mapped, p), angular_momentum(mapped, p)};
        }
        case Frame::ShiftedHO:
            return {hamiltonian(frame, st, p), angular_momentum(st, p)};
        case Frame::BohlinKepler:
            return {hamiltonian(frame, st, p, ctx.bohlin_k), angular_momentum(st, p)};
    }
    return {0.0, 0.0};
}

}  // namespace detail

// Integrate one frame's flow over [span0, span1], recording every accepted step.
inline IntegrationResult integrate(Frame frame, const PhysParams& p, const State& state0,
                                   double span0, double span1, const IntegratorConfig& cfg,
                                   const FrameContext& ctx = {}) {
    cfg.validate();
    ode::Rhs f = [frame, &p, &ctx](double t, const std::vector<double>& y,
                                   std::vector<double>& dydt) {
        State st{y[0], y[1], y[2], y[3], t};
        auto acc = rhs(frame, p, st, ctx);
        dydt = {y[2], y[3], acc[0], acc[1]};
    };

    ode::Options opt = cfg.ode_options();
    if (is_kepler_type(frame) && cfg.r_min_event > 0.0) {
        const double rmin = cfg.r_min_event;
        opt.event = [rmin](double, const std::vector<double>& y) {
            return std::hypot(y[0], y[1]) - rmin;
        };
    }

    auto sol = ode::integrate(f, span0, span1, {state0.q1, state0.q2, state0.v1, state0.v2}, opt);

    IntegrationResult res;
    res.context = ctx;
    res.trajectory.frame = frame;
    res.trajectory.params = p;
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
        State st{sol.states[i][0], sol.states[i][1], sol.states[i][2], sol.states[i][3],
                 sol.times[i]};
        res.trajectory.samples.push_back(st);
        res.trajectory.diagnostics.push_back(detail::frame_diagnostics(frame, p, st, ctx));
    }
    res.n_steps = sol.n_steps;
    res.n_rejected = sol.n_rejected;
    res.event_time = sol.event_time;
    res.status = sol.status == ode::StepStatus::Ok ? IntegrationStatus::Ok
                 : sol.status == ode::StepStatus::EventHit ? IntegrationStatus::EventHit
                                                           : IntegrationStatus::StepCollapse;
    res.raw = std::move(sol);
    return res;
}

// Regularized integration: the sextic-oscillator flow in tau, augmented with
// dt/dtau = |U|^2 / c so physical time comes along for free. Regular at U = 0.
struct RegularizedResult {
    Trajectory trajectory;              // SexticOsc frame, time variable tau
    std::vector<double> physical_time;  // t(tau) per sample
    std::size_t n_steps = 0, n_rejected = 0;
    ode::Solution raw;  // y = (U1, U2, U1', U2', t)

    // state and physical time at arbitrary tau
    std::pair<State, double> eval(double tau) const {
        std::vector<double> y;
        raw.eval(tau, y);
        return {State{y[0], y[1], y[2], y[3], tau}, y[4]};
    }
};

inline RegularizedResult integrate_regularized(const PhysParams& p, const State& u0,
                                               double t0, double tau0, double tau1,
                                               const IntegratorConfig& cfg,
                                               const FrameContext& ctx,
                                               double t_stop = std::numeric_limits<double>::infinity()) {
    cfg.validate();
    ode::Rhs f = [&p, &ctx](double tau, const std::vector<double>& y,
                            std::vector<double>& dydt) {
        State st{y[0], y[1], y[2], y[3], tau};
        auto acc = rhs(Frame::SexticOsc, p, st, ctx);
        const double r = y[0] * y[0] + y[1] * y[1];
        dydt = {y[2], y[3], acc[0], acc[1], r / p.c};
    };
    ode::Options opt = cfg.ode_options();
    if (std::isfinite(t_stop))
        opt.event = [t_stop](double, const std::vector<double>& y) { return t_stop - y[4]; };
    auto sol = ode::integrate(f, tau0, tau1, {u0.q1, u0.q2, u0.v1, u0.v2, t0}, opt);

    RegularizedResult res;
    res.trajectory.frame = Frame::SexticOsc;
    res.trajectory.params = p;
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
        State st{sol.states[i][0], sol.states[i][1], sol.states[i][2], sol.states[i][3],
                 sol.times[i]};
        res.trajectory.samples.push_back(st);
        res.trajectory.diagnostics.push_back(
            detail::frame_diagnostics(Frame::SexticOsc, p, st, ctx));
        res.physical_time.push_back(sol.states[i][4]);
    }
    res.n_steps = sol.n_steps;
    res.n_rejected = sol.n_rejected;
    res.raw = std::move(sol);
    return res;
}

}  // namespace dcf
