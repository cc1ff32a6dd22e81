#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dcf/conserved.hpp"
#include "dcf/dynamics.hpp"
#include "dcf/maps.hpp"
#include "dcf/state.hpp"

namespace dcf {

namespace detail {

inline MapReport finish(std::string name, double dev, double drift, std::size_t n,
                        double tol) {
    MapReport r;
    r.pipeline = std::move(name);
    r.max_position_deviation = dev;
    r.max_conserved_drift = drift;
    r.n_samples = n;
    r.tolerance = tol;
    r.pass = dev < tol;
    return r;
}

inline double diag_drift(const Trajectory& tr, int idx = 0) {
    double lo = tr.diagnostics.front()[idx], hi = lo;
    for (const auto& d : tr.diagnostics) {
        lo = std::min(lo, d[idx]);
        hi = std::max(hi, d[idx]);
    }
    return hi - lo;
}

// Shifted-HO flow augmented with the Bohlin clock dt/dtau = 4 |omega|^2.
inline ode::Solution integrate_shifted_with_time(const PhysParams& p, const State& w0,
                                                 double tau0, double tau1,
                                                 const IntegratorConfig& cfg) {
    const double wt2 = p.Omega * p.Omega - 0.25 * p.lambda * p.lambda;
    ode::Rhs f = [wt2](double, const std::vector<double>& y, std::vector<double>& dydt) {
        dydt = {y[2], y[3], -wt2 * y[0], -wt2 * y[1],
                4.0 * (y[0] * y[0] + y[1] * y[1])};
    };
    return ode::integrate(f, tau0, tau1, {w0.q1, w0.q2, w0.v1, w0.v2, 0.0},
                          cfg.ode_options());
}

}  // namespace detail

// Damped Kepler integrated directly, mapped sample-by-sample, against an
// independent integration of the transformed frame.
inline MapReport run_point_kepler(const PhysParams& p, const State& damped_ic, double T,
                                  const IntegratorConfig& cfg, double tol) {
    auto damped = integrate(Frame::DampedKepler, p, damped_ic, damped_ic.s,
                            damped_ic.s + T, cfg);
    const State mapped_ic = point_map_kepler(damped_ic, p.lambda);
    auto direct = integrate(Frame::TransformedKepler, p, mapped_ic, mapped_ic.s,
                            mapped_ic.s + T, cfg);

    double dev = 0.0;
    for (const auto& st : damped.trajectory.samples) {
        const State mapped = point_map_kepler(st, p.lambda);
        const State ref = direct.eval(st.s);
        dev = std::max(dev, std::abs(mapped.pos() - ref.pos()));
    }
    return detail::finish("point-kepler", dev, detail::diag_drift(direct.trajectory),
                          damped.trajectory.size(), tol);
}

// Damped HO integrated directly, mapped sample-by-sample, against an
// independent integration of the shifted frame.
inline MapReport run_point_ho(const PhysParams& p, const State& damped_ic, double T,
                              const IntegratorConfig& cfg, double tol) {
    auto damped = integrate(Frame::DampedHO, p, damped_ic, damped_ic.s, damped_ic.s + T, cfg);
    const State mapped_ic = ho_point_map(damped_ic, p.lambda);
    auto direct = integrate(Frame::ShiftedHO, p, mapped_ic, mapped_ic.s, mapped_ic.s + T, cfg);

    double dev = 0.0;
    for (const auto& st : damped.trajectory.samples) {
        const State mapped = ho_point_map(st, p.lambda);
        const State ref = direct.eval(st.s);
        dev = std::max(dev, std::abs(mapped.pos() - ref.pos()));
    }
    return detail::finish("point-ho", dev, detail::diag_drift(direct.trajectory),
                          damped.trajectory.size(), tol);
}

// Regularized sextic integration pushed through Z = U^2 and t(tau), against the
// direct transformed-Kepler trajectory at matched physical times.
inline MapReport run_levi_civita(const PhysParams& p, const State& transformed_ic,
                                 double T, const IntegratorConfig& cfg, double tol) {
    const double calE = cal_E(transformed_ic, p);
    FrameContext ctx;
    ctx.cal_E = calE;

    auto direct = integrate(Frame::TransformedKepler, p, transformed_ic, 0.0, T, cfg);

    State u0 = levi_civita_inverse(transformed_ic, p.c, 0.0);
    // generous tau budget; the physical-time event stops the run at t = T
    const double r0 = transformed_ic.r();
    const double tau_budget = 1000.0 * p.c * T / std::max(r0, 1e-3) + 100.0;
    auto reg = integrate_regularized(p, u0, 0.0, 0.0, tau_budget, cfg, ctx, T);

    double dev = 0.0, drift = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < reg.trajectory.size(); ++i) {
        const double t = reg.physical_time[i];
        if (t > T) break;
        const State& u = reg.trajectory.samples[i];
        const Complex Z = u.pos() * u.pos();
        const State ref = direct.eval(t);
        dev = std::max(dev, std::abs(Z - ref.pos()));
        const double r = std::norm(u.pos());
        if (r > 1e-8)
            drift = std::max(drift, std::abs(cal_E_from_sextic(u, p) - calE));
        ++n;
    }
    return detail::finish("levi-civita", dev, drift, n, tol);
}

// Shifted-HO samples pushed through Z = omega^2 with the reconstructed Bohlin
// clock, against a direct integration of the Kepler flow with k = E/4.
inline MapReport run_bohlin(const PhysParams& p, const State& shifted_ic, double tau_span,
                            const IntegratorConfig& cfg, double tol) {
    const double E = hamiltonian(Frame::ShiftedHO, shifted_ic, p);
    FrameContext ctx;
    ctx.bohlin_k = identify_kepler_strength(E);

    auto shifted = detail::integrate_shifted_with_time(p, shifted_ic, 0.0, tau_span, cfg);

    const State z_ic = bohlin_map(shifted_ic, 0.0);
    const double t_end = shifted.states.back()[4];
    auto kepler = integrate(Frame::BohlinKepler, p, z_ic, 0.0, t_end, cfg, ctx);

    const double ek_target = identify_kepler_energy(p.m, p.Omega, p.lambda);
    double dev = 0.0, drift = 0.0;
    for (std::size_t i = 0; i < shifted.times.size(); ++i) {
        const State w{shifted.states[i][0], shifted.states[i][1], shifted.states[i][2],
                      shifted.states[i][3], shifted.times[i]};
        const double t = shifted.states[i][4];
        if (std::norm(w.pos()) < 1e-10) continue;
        const State z = bohlin_map(w, t);
        const State ref = kepler.eval(t);
        dev = std::max(dev, std::abs(z.pos() - ref.pos()));
        drift = std::max(drift, std::abs(kepler_energy(z, p, ctx.bohlin_k) - ek_target));
    }
    return detail::finish("bohlin", dev, drift, shifted.times.size(), tol);
}

// Damped Kepler -> point map -> Levi-Civita, all compared at matched times.
inline MapReport run_full_kepler_chain(const PhysParams& p, const State& damped_ic,
                                       double T, const IntegratorConfig& cfg, double tol) {
    MapReport stage1 = run_point_kepler(p, damped_ic, T, cfg, tol);
    const State transformed_ic = point_map_kepler(damped_ic, p.lambda);
    MapReport stage2 = run_levi_civita(p, transformed_ic, T, cfg, tol);
    MapReport r = detail::finish(
        "full-kepler-chain",
        std::max(stage1.max_position_deviation, stage2.max_position_deviation),
        std::max(stage1.max_conserved_drift, stage2.max_conserved_drift),
        stage1.n_samples + stage2.n_samples, tol);
    return r;
}

// Damped HO -> point map -> Bohlin.
inline MapReport run_full_ho_chain(const PhysParams& p, const State& damped_ic,
                                   double tau_span, const IntegratorConfig& cfg,
                                   double tol) {
    MapReport stage1 = run_point_ho(p, damped_ic, tau_span, cfg, tol);
    const State shifted_ic = ho_point_map(damped_ic, p.lambda);
    MapReport stage2 = run_bohlin(p, shifted_ic, tau_span, cfg, tol);
    return detail::finish(
        "full-ho-chain",
        std::max(stage1.max_position_deviation, stage2.max_position_deviation),
        std::max(stage1.max_conserved_drift, stage2.max_conserved_drift),
        stage1.n_samples + stage2.n_samples, tol);
}

}  // namespace dcf
