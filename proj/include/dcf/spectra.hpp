#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>

#include "dcf/oracle.hpp"
#include "dcf/params.hpp"
#include "dcf/specfun.hpp"

namespace dcf::spectra {

enum class Method { PaperFormula, QuadratureOracle, GridDiagonalization };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::PaperFormula: return "paper-formula";
        case Method::QuadratureOracle: return "quadrature-oracle";
        case Method::GridDiagonalization: return "grid-diagonalization";
    }
    return "?";
}

struct QuantumNumbers {
    long n_rho = 0;
    long l = 0;
};

// (n_r, l~) on the Kepler side; exists only for even (n_rho, l)
struct MappedPair {
    long n_r = 0;
    long l_tilde = 0;
};

inline std::optional<MappedPair> map_quantum_numbers(long n_rho, long l) {
    if (n_rho % 2 != 0 || l % 2 != 0) return std::nullopt;
    return MappedPair{n_rho / 2, l / 2};
}

struct SpectrumEntry {
    QuantumNumbers qn;
    double E0 = 0.0;
    double E1 = 0.0;
    Method method = Method::PaperFormula;
    PhysParams params;
};

// ---------------------------------------------------------------------------
// Unperturbed ladders.
// ---------------------------------------------------------------------------

inline double osc_sextic_E0(long n_rho, long l, double omega0, double hbar) {
    return hbar * omega0 * (2.0 * n_rho + std::labs(l) + 1.0);
}

inline double shifted_ho_E(long n_rho, long l, double omega_tilde, double hbar) {
    return hbar * omega_tilde * (2.0 * n_rho + std::labs(l) + 1.0);
}

inline double hatom_like_E0(long n_r, long l_tilde, double m, double k, double hbar) {
    const double d = n_r + std::labs(l_tilde) + 0.5;
    return -m * k * k / (2.0 * hbar * hbar * d * d);
}

// ---------------------------------------------------------------------------
// First-order corrections, oscillator side.
//
// Printed form:
//   E1 = -(lambda^2 m / 64 c^2) alpha^{-4} binom(n+|l|, n) binom(n-4, n)
//        Gamma(|l|+4) 3F2(-n, |l|+4, 4; |l|+1, 4-n; 1) A_{n,l},
//   A_{n,l} = (n! |l|! / (n+|l|)!)^2 alpha^{-|l|}.
// The generalized binomial and the singular lower parameter 4-n are combined
// through the exact-rational kernel so the product stays finite.
// ---------------------------------------------------------------------------

// the quantum-number-dependent rational factor of the printed formula
inline Rational osc_sextic_E1_paper_Q(long n_rho, long l) {
    const long al = std::labs(l);
    Rational A = factorial(n_rho) * factorial(al) / factorial(n_rho + al);
    A *= A;
    return gen_binomial(n_rho + al, n_rho) *
           hyp3f2_with_binomial_prefactor(n_rho, al + 4, 4, al + 1, 4 - n_rho,
                                          n_rho - 4, n_rho) *
           gamma_int(al + 4) * A;
}

inline double osc_sextic_E1_paper(long n_rho, long l, const PhysParams& p, double alpha) {
    const long al = std::labs(l);
    const double pref = -p.lambda * p.lambda * p.m / (64.0 * p.c * p.c) *
                        std::pow(alpha, -4.0 - static_cast<double>(al));
    return pref * to_double(osc_sextic_E1_paper_Q(n_rho, l));
}

// <n l| -(lambda^2 m / 32 c^2) rho^6 |n l>, the first-order shift of the
// perturbing term read straight off the radial equation
inline double osc_sextic_E1_oracle(long n_rho, long l, const PhysParams& p, double alpha) {
    const double me = oracle::me_rho6_closed_form(n_rho, n_rho, l, alpha);
    return -p.lambda * p.lambda * p.m / (32.0 * p.c * p.c) * me;
}

// ---------------------------------------------------------------------------
// First-order correction, mapped hydrogen-like side.
// ---------------------------------------------------------------------------

// printed E' formula (n_r slots exactly as typeset)
inline double hatom_like_E1_paper(long n_r, long l_tilde, const PhysParams& p,
                                  double beta) {
    const long alt = std::labs(l_tilde);
    const long L = 2 * alt;
    const double tb = 2.0 * beta;
    Rational B = factorial(n_r) * factorial(L) / factorial(n_r + L);
    B *= B;
    const Rational Q = gen_binomial(n_r + L, n_r) *
                       hyp3f2_with_binomial_prefactor(n_r, L + 4, 4, L + 1, 4 - n_r,
                                                      n_r - 4, n_r) *
                       gamma_int(L + 4) * B;
    return -p.lambda * p.lambda * p.m / 8.0 *
           std::pow(tb, -4.0 - static_cast<double>(L)) * to_double(Q);
}

// independent check: first-order shift of -(lambda^2 m / 8) r^2 in the
// normalized 2D hydrogen-like state with decay constant beta
inline double hatom_like_E1_oracle(long n_r, long l_tilde, const PhysParams& p,
                                   double beta) {
    const long L = 2 * std::labs(l_tilde);
    const int n_nodes = static_cast<int>(2 * n_r + L) + 6;
    const auto q = oracle::gauss_laguerre(n_nodes);
    // R(r) ~ r^{|lt|} e^{-beta r} L_{n_r}^{L}(2 beta r); s = 2 beta r
    double norm = 0.0, r2 = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        const double s = q.nodes[i];
        const double lag = laguerre_assoc(n_r, static_cast<double>(L), s);
        const double f2 = std::pow(s, static_cast<double>(L)) * lag * lag;
        norm += q.weights[i] * f2 * s;
        r2 += q.weights[i] * f2 * s * s * s;
    }
    const double r2_expect = r2 / norm / (4.0 * beta * beta);
    return -p.lambda * p.lambda * p.m / 8.0 * r2_expect;
}

// the paper's substitution route: oscillator oracle at (2 n_r, 2 l~, alpha = 2 beta)
inline double hatom_like_E1_osc_oracle(long n_r, long l_tilde, const PhysParams& p,
                                       double beta) {
    return osc_sextic_E1_oracle(2 * n_r, 2 * l_tilde, p, 2.0 * beta);
}

}  // namespace dcf::spectra
