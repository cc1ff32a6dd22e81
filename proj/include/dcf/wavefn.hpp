#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>

#include "dcf/oracle.hpp"
#include "dcf/params.hpp"
#include "dcf/specfun.hpp"
#include "dcf/spectra.hpp"

namespace dcf::wavefn {

using Complex = std::complex<double>;

inline constexpr double inv_sqrt_2pi = 0.3989422804014327;

// ---------------------------------------------------------------------------
// Oscillator-side eigenfunctions
//   psi0 = (1/sqrt(2 pi)) e^{-alpha rho^2/2} rho^{|l|}
//          1F1(-n; |l|+1; alpha rho^2) e^{i l phi}
// as printed (not unit-normalized); the normalized variant divides by the
// exact radial norm.
// ---------------------------------------------------------------------------

inline double psi0_osc_radial(long n_rho, long l, double alpha, double rho) {
    const long al = std::labs(l);
    const double x = alpha * rho * rho;
    return std::exp(-0.5 * x) * std::pow(rho, static_cast<double>(al)) *
           hyp1f1_terminating(n_rho, static_cast<double>(al + 1), x);
}

// integral of the printed |psi0|^2 over the plane:
//   n! (|l|!)^2 / (2 alpha^{|l|+1} (n+|l|)!)
inline double psi0_osc_norm2(long n_rho, long l, double alpha) {
    const long al = std::labs(l);
    const Rational q = factorial(n_rho) * factorial(al) * factorial(al) /
                       (Rational(2) * factorial(n_rho + al));
    return to_double(q) * std::pow(alpha, -1.0 - static_cast<double>(al));
}

inline Complex psi0_osc(long n_rho, long l, double alpha, double rho, double phi,
                        bool normalized = false) {
    double v = inv_sqrt_2pi * psi0_osc_radial(n_rho, l, alpha, rho);
    if (normalized) v /= std::sqrt(psi0_osc_norm2(n_rho, l, alpha));
    const double a = static_cast<double>(l) * phi;
    return Complex(v * std::cos(a), v * std::sin(a));
}

enum class CorrectionMethod { PaperKernel, OracleMatrixElement };

// First-order correction sum; rho^6 only connects |n' - n| <= 3 at fixed l, so
// the sum is the exact band {n-3, ..., n+3} \ {n}. The paper kernel pairs with
// the printed (unnormalized) basis; the oracle route is standard perturbation
// theory in the normalized basis.
inline Complex psi1_osc(long n_rho, long l, const PhysParams& p, double alpha,
                        double omega0, double rho, double phi,
                        CorrectionMethod method = CorrectionMethod::PaperKernel) {
    const long al = std::labs(l);
    Complex sum = 0.0;
    for (long np = std::max(0L, n_rho - 3); np <= n_rho + 3; ++np) {
        if (np == n_rho) continue;
        const double dE = 2.0 * p.hbar * omega0 * static_cast<double>(n_rho - np);
        double coeff;
        if (method == CorrectionMethod::PaperKernel) {
            const double A =
                -p.lambda * p.lambda * p.m / (64.0 * p.c * p.c) *
                std::pow(alpha, -4.0 - static_cast<double>(al)) *
                to_double(factorial(n_rho) * factorial(al) / factorial(n_rho + al)) *
                to_double(factorial(np) * factorial(al) / factorial(np + al));
            const double B =
                to_double(gen_binomial(np + al, n_rho) *
                          hyp3f2_with_binomial_prefactor(np, al + 4, 4, al + 1,
                                                         4 - n_rho, n_rho - 4, n_rho) *
                          gamma_int(al + 4));
            coeff = A * B / dE;
            sum += coeff * psi0_osc(np, l, alpha, rho, phi, false);
        } else {
            const double me = oracle::me_rho6_closed_form(np, n_rho, l, alpha);
            coeff = -p.lambda * p.lambda * p.m / (32.0 * p.c * p.c) * me / dE;
            sum += coeff * psi0_osc(np, l, alpha, rho, phi, true);
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Mapped hydrogen-like eigenfunctions
//   psi = (1/sqrt(2 pi)) e^{i l~ theta} r^{|l~|} e^{-beta r}
//         1F1(-n_r; 2|l~|+1; 2 beta r)
// ---------------------------------------------------------------------------

inline double psi_hatom_radial(long n_r, long l_tilde, double beta, double r) {
    const long L = 2 * std::labs(l_tilde);
    return std::pow(r, 0.5 * L) * std::exp(-beta * r) *
           hyp1f1_terminating(n_r, static_cast<double>(L + 1), 2.0 * beta * r);
}

// integral of the printed |psi|^2 over the plane:
//   n! (L!)^2 (2n+L+1) / ((2 beta)^{L+2} (n+L)!),  L = 2|l~|
inline double psi_hatom_norm2(long n_r, long l_tilde, double beta) {
    const long L = 2 * std::labs(l_tilde);
    const Rational q = factorial(n_r) * factorial(L) * factorial(L) *
                       Rational(2 * n_r + L + 1) / factorial(n_r + L);
    return to_double(q) * std::pow(2.0 * beta, -2.0 - static_cast<double>(L));
}

inline Complex psi_hatom(long n_r, long l_tilde, double beta, double r, double theta,
                         bool normalized = false) {
    double v = inv_sqrt_2pi * psi_hatom_radial(n_r, l_tilde, beta, r);
    if (normalized) v /= std::sqrt(psi_hatom_norm2(n_r, l_tilde, beta));
    const double a = static_cast<double>(l_tilde) * theta;
    return Complex(v * std::cos(a), v * std::sin(a));
}

// First-order mapped correction, same finite band; the printed kernel keeps
// the unnormalized basis and hydrogen-side unperturbed denominators.
inline Complex psi1_hatom(long n_r, long l_tilde, const PhysParams& p, double beta,
                          double r, double theta) {
    const long L = 2 * std::labs(l_tilde);
    const double E0n = spectra::hatom_like_E0(n_r, l_tilde, p.m, p.k, p.hbar);
    Complex sum = 0.0;
    for (long np = std::max(0L, n_r - 3); np <= n_r + 3; ++np) {
        if (np == n_r) continue;
        const double dE = E0n - spectra::hatom_like_E0(np, l_tilde, p.m, p.k, p.hbar);
        const double Bt =
            -p.lambda * p.lambda * p.m / 8.0 *
            std::pow(2.0 * beta, -4.0 - static_cast<double>(L)) *
            to_double(factorial(n_r) * factorial(L) / factorial(n_r + L)) *
            to_double(factorial(np) * factorial(L) / factorial(np + L));
        const double kern =
            to_double(gen_binomial(np + L, n_r) *
                      hyp3f2_with_binomial_prefactor(np, L + 4, 4, L + 1, 4 - n_r,
                                                     n_r - 4, n_r) *
                      gamma_int(L + 4));
        sum += Bt * kern / dE * psi_hatom(np, l_tilde, beta, r, theta, false);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Gauge restoration: Phi = exp(-i m lambda r^2 / 4 hbar) psi.
// ---------------------------------------------------------------------------

inline Complex gauge_restore(Complex psi, double r, double lambda, double m,
                             double hbar) {
    const double phase = -m * lambda * r * r / (4.0 * hbar);
    return psi * Complex(std::cos(phase), std::sin(phase));
}

}  // namespace dcf::wavefn
