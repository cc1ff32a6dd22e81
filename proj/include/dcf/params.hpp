#pragma once

#include <cmath>
#include <string>

#include "dcf/errors.hpp"

namespace dcf {

// Physical constants in natural units (m = k = hbar = 1 unless overridden).
// c is the time-reparametrization scale; the quantum maps require c = 1/4.
struct PhysParams {
    double m = 1.0;       // reduced mass factor
    double k = 1.0;       // central-force coupling
    double lambda = 0.0;  // damping rate
    double hbar = 1.0;
    double Omega = 1.0;   // bare oscillator frequency (HO pipelines only)
    double c = 0.25;      // fictitious-time scale, dt = (r/c) dtau
    double gamma = 1.0;   // conformal-squaring scale, fixed to 1

    void validate() const {
        if (!(m > 0.0)) throw ConfigError("m must be > 0");
        if (!(k > 0.0)) throw ConfigError("k must be > 0");
        if (!(hbar > 0.0)) throw ConfigError("hbar must be > 0");
        if (!(c > 0.0)) throw ConfigError("c must be > 0");
        if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
        if (lambda < 0.0) throw ConfigError("lambda must be >= 0");
        if (Omega < 0.0) throw ConfigError("Omega must be >= 0");
    }

    // Omega_tilde^2 = Omega^2 - lambda^2/4; valid only underdamped.
    double omega_tilde() const {
        const double w2 = Omega * Omega - 0.25 * lambda * lambda;
        if (w2 <= 0.0)
            throw OverdampedRegime("Omega^2 - lambda^2/4 <= 0 (overdamped)");
        return std::sqrt(w2);
    }

    // Oscillator frequency fixed by the conserved energy: m Omega0^2 / 2 = E / (4 c^2).
    double omega0(double cal_E) const {
        if (cal_E <= 0.0)
            throw NonpositiveEnergy("conserved energy must be > 0 to define Omega0");
        return std::sqrt(cal_E / (2.0 * m * c * c));
    }
};

struct DerivedConstants {
    double omega_tilde = 0.0;
    double omega0 = 0.0;
    double alpha = 0.0;  // m Omega0 / hbar (Kepler side) or m Omega_tilde / hbar (HO side)
    double beta = 0.0;   // alpha / 2
};

// Kepler-side constants: Omega0 from the conserved quantity, alpha = m Omega0 / hbar.
inline DerivedConstants derive_constants_kepler(const PhysParams& p, double cal_E) {
    DerivedConstants d;
    d.omega0 = p.omega0(cal_E);
    d.alpha = p.m * d.omega0 / p.hbar;
    d.beta = 0.5 * d.alpha;
    return d;
}

// Both towers at once; throws if either regime constraint is violated.
inline DerivedConstants derive_constants(const PhysParams& p, double cal_E) {
    DerivedConstants d = derive_constants_kepler(p, cal_E);
    d.omega_tilde = p.omega_tilde();
    return d;
}

// HO-side constants: everything from the shifted frequency.
inline DerivedConstants derive_constants_ho(const PhysParams& p) {
    DerivedConstants d;
    d.omega_tilde = p.omega_tilde();
    d.alpha = p.m * d.omega_tilde / p.hbar;
    d.beta = 0.5 * d.alpha;
    return d;
}

}  // namespace dcf
