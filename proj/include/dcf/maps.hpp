#pragma once

#include <cmath>
#include <complex>

#include "dcf/errors.hpp"
#include "dcf/params.hpp"
#include "dcf/state.hpp"

namespace dcf {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Time-dependent point maps: X_i = x_i e^{lambda t / 2} (and its HO twin).
// Velocities follow from the chain rule; the time value is unchanged.
// ---------------------------------------------------------------------------

inline State point_map_forward(const State& st, double lambda) {
    const double e = std::exp(0.5 * lambda * st.s);
    return State{st.q1 * e, st.q2 * e, (st.v1 + 0.5 * lambda * st.q1) * e,
                 (st.v2 + 0.5 * lambda * st.q2) * e, st.s};
}

inline State point_map_inverse(const State& st, double lambda) {
    const double e = std::exp(-0.5 * lambda * st.s);
    return State{st.q1 * e, st.q2 * e, (st.v1 - 0.5 * lambda * st.q1) * e,
                 (st.v2 - 0.5 * lambda * st.q2) * e, st.s};
}

// DampedKepler(t) <-> TransformedKepler(t)
inline State point_map_kepler(const State& damped, double lambda) {
    return point_map_forward(damped, lambda);
}
inline State point_map_kepler_inverse(const State& transformed, double lambda) {
    return point_map_inverse(transformed, lambda);
}

// DampedHO(tau) <-> ShiftedHO(tau)
inline State ho_point_map(const State& damped, double lambda) {
    return point_map_forward(damped, lambda);
}
inline State ho_point_map_inverse(const State& shifted, double lambda) {
    return point_map_inverse(shifted, lambda);
}

// ---------------------------------------------------------------------------
// Conformal squaring map Z = U^2 with fictitious time d/dt = (c/r) d/dtau.
// ---------------------------------------------------------------------------

// SexticOsc (U, dU/dtau, tau) -> TransformedKepler (Z, dZ/dt, t).
// dZ/dtau = 2 U dU/dtau and dZ/dt = (c/r) dZ/dtau with r = |U|^2.
inline State levi_civita_forward(const State& u, double c, double t) {
    const Complex U = u.pos();
    const Complex Up = u.vel();
    const Complex Z = U * U;
    const double r = std::norm(U);
    if (r == 0.0) throw OriginSingularity("levi_civita_forward: velocity map at U = 0");
    const Complex Zdot = (c / r) * 2.0 * U * Up;
    return make_state(Z, Zdot, t);
}

// TransformedKepler (Z, dZ/dt, t) -> SexticOsc (U, dU/dtau, tau).
// U = sqrt(Z) on the branch nearest `hint` (continuity tracking); with no hint
// the principal root is taken, which is ambiguous only at Z = 0.
inline State levi_civita_inverse(const State& z, double c, double tau,
                                 const Complex* hint = nullptr) {
    const Complex Z = z.pos();
    const Complex Zdot = z.vel();
    Complex U = std::sqrt(Z);
    if (U == 0.0 && hint == nullptr)
        throw BranchAmbiguity("levi_civita_inverse: Z = 0 without trajectory context");
    if (hint != nullptr) {
        // pick the root with the larger real inner product against the hint
        const double dp = U.real() * hint->real() + U.imag() * hint->imag();
        if (dp < 0.0) U = -U;
    }
    const double r = std::abs(Z);
    if (r == 0.0) throw OriginSingularity("levi_civita_inverse: velocity map at Z = 0");
    const Complex Up = (r / c) * Zdot / (2.0 * U);
    return make_state(U, Up, tau);
}

// ---------------------------------------------------------------------------
// Bohlin map: Z = omega^2, with d/dt = 1/(4 |omega|^2) d/dtau.
// ---------------------------------------------------------------------------

// ShiftedHO (omega, omega', tau) -> BohlinKepler (Z, dZ/dt, t).
inline State bohlin_map(const State& w, double t) {
    const Complex omega = w.pos();
    const Complex omegap = w.vel();
    if (omega == 0.0)
        throw OriginSingularity("bohlin_map: velocity map undefined at omega = 0");
    const Complex Z = omega * omega;
    const Complex Zdot = omegap / (2.0 * std::conj(omega));
    return make_state(Z, Zdot, t);
}

// Physical-time increment of the Bohlin reparametrization: dt = 4 |omega|^2 dtau.
inline double bohlin_time_rate(const State& w) {
    return 4.0 * (w.q1 * w.q1 + w.q2 * w.q2);
}

// ---------------------------------------------------------------------------
// Parameter identifications between the dual descriptions.
// ---------------------------------------------------------------------------

// E = -(1/8) m Omega0^2 (mapped H-atom energy from the oscillator frequency).
inline double identify_energy_from_omega0(double m, double omega0) {
    return -0.125 * m * omega0 * omega0;
}

// k = E/4 (Kepler strength from the oscillator's conserved energy).
inline double identify_kepler_strength(double E) { return 0.25 * E; }

// -E_Kepler = (m/8)(Omega^2 - lambda^2/4).
inline double identify_kepler_energy(double m, double Omega, double lambda) {
    return -0.125 * m * (Omega * Omega - 0.25 * lambda * lambda);
}

}  // namespace dcf
