#pragma once

#include <cmath>

#include "dcf/errors.hpp"
#include "dcf/params.hpp"
#include "dcf/state.hpp"

namespace dcf {

// Conserved quantity of the transformed Kepler frame, returned with the sign
// the symbol carries in the defining relation
//   -calE = (m/2) v^2 - (lambda^2/8) m r^2 - k/r.
inline double cal_E(const State& st, const PhysParams& p) {
    const double r = st.r();
    if (r <= 0.0) throw CollisionSingularity("cal_E: r = 0");
    const double v2 = st.v1 * st.v1 + st.v2 * st.v2;
    return p.k / r + 0.125 * p.lambda * p.lambda * p.m * (r * r) - 0.5 * p.m * v2;
}

// calE evaluated from the regularized frame:
//   -calE = (2 m c^2 / r) |U'|^2 - (m lambda^2 / 8) r^2 - k/r,  r = |U|^2.
inline double cal_E_from_sextic(const State& st, const PhysParams& p) {
    const double r = st.q1 * st.q1 + st.q2 * st.q2;
    if (r <= 0.0) throw CollisionSingularity("cal_E_from_sextic: U = 0");
    const double up2 = st.v1 * st.v1 + st.v2 * st.v2;
    return p.k / r + 0.125 * p.lambda * p.lambda * p.m * r * r -
           2.0 * p.m * p.c * p.c * up2 / r;
}

// L = X1 P2 - X2 P1; the lambda-dependent momentum shifts cancel, leaving
// m (q1 v2 - q2 v1) in every frame used here.
inline double angular_momentum(const State& st, const PhysParams& p) {
    return p.m * (st.q1 * st.v2 - st.q2 * st.v1);
}

// Frame Hamiltonian in terms of velocities. `aux` carries the frame's extra
// constant: the conserved calE for SexticOsc, the Kepler coupling (= E/4 on
// Bohlin-mapped orbits; defaults to params.k when aux = 0) for BohlinKepler.
inline double hamiltonian(Frame frame, const State& st, const PhysParams& p,
                          double aux = 0.0) {
    const double v2 = st.v1 * st.v1 + st.v2 * st.v2;
    const double q2 = st.q1 * st.q1 + st.q2 * st.q2;
    switch (frame) {
        case Frame::ShiftedHO: {
            const double wt = p.omega_tilde();
            return 0.5 * p.m * v2 + 0.5 * p.m * wt * wt * q2;
        }
        case Frame::SexticOsc: {
            const double c2 = p.c * p.c;
            return 0.5 * p.m * v2 + aux / (4.0 * c2) * q2 -
                   p.m * p.lambda * p.lambda / (32.0 * c2) * q2 * q2 * q2;
        }
        case Frame::TransformedKepler:
            return -cal_E(st, p);
        case Frame::BohlinKepler: {
            const double r = st.r();
            if (r <= 0.0) throw CollisionSingularity("hamiltonian: r = 0");
            const double kk = (aux != 0.0) ? aux : p.k;
            return 0.5 * p.m * v2 - kk / r;
        }
        default:
            throw FrameMismatch("hamiltonian: no conserved Hamiltonian for frame");
    }
}

// Kepler energy of a Bohlin-frame state; the defining relation reads
//   -E_Kepler = (m/8)(Omega^2 - lambda^2/4) on mapped trajectories.
inline double kepler_energy(const State& st, const PhysParams& p, double k_coupling) {
    return hamiltonian(Frame::BohlinKepler, st, p, k_coupling);
}

}  // namespace dcf
