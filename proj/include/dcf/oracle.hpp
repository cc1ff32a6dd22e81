#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "dcf/conserved.hpp"
#include "dcf/errors.hpp"
#include "dcf/maps.hpp"
#include "dcf/params.hpp"
#include "dcf/specfun.hpp"
#include "dcf/state.hpp"

namespace dcf::oracle {

// ---------------------------------------------------------------------------
// Gauss-Laguerre quadrature (weight e^{-s} on [0, inf)), via the Jacobi matrix.
// ---------------------------------------------------------------------------

struct Quadrature {
    std::vector<double> nodes, weights;
};

inline Quadrature gauss_laguerre(int n) {
    Eigen::VectorXd diag(n), sub(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
    for (int i = 1; i < n; ++i) sub[i - 1] = static_cast<double>(i);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub);
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        q.weights[i] = v0 * v0;  // mu0 = integral of e^{-s} = 1
    }
    return q;
}

// ---------------------------------------------------------------------------
// Radial matrix element <n' l | rho^6 | n l> in the normalized 2D-oscillator
// basis R_{nl}(rho) = N rho^{|l|} e^{-alpha rho^2/2} L_n^{|l|}(alpha rho^2).
// Substituting s = alpha rho^2 reduces it to
//   alpha^{-3} sqrt(n! n'! / ((n+|l|)! (n'+|l|)!)) *
//       integral_0^inf s^{|l|+3} e^{-s} L_n^{|l|}(s) L_{n'}^{|l|}(s) ds.
// ---------------------------------------------------------------------------

struct MatrixElement {
    long n = 0, n_prime = 0, l = 0;
    double quadrature = 0.0;   // Gauss-Laguerre, node count exact for the degree
    double closed_form = 0.0;  // exact-rational Laguerre-product expansion
};

inline double me_rho6_prefactor(long n, long n_prime, long l, double alpha) {
    const long al = std::labs(l);
    const Rational ratio = factorial(n) * factorial(n_prime) /
                           (factorial(n + al) * factorial(n_prime + al));
    return std::sqrt(to_double(ratio)) / (alpha * alpha * alpha);
}

inline double me_rho6_quadrature(long n, long n_prime, long l, double alpha) {
    const long al = std::labs(l);
    const int n_nodes = static_cast<int>(n + n_prime + al) + 8;
    const Quadrature q = gauss_laguerre(n_nodes);
    double integral = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        const double s = q.nodes[i];
        integral += q.weights[i] * std::pow(s, static_cast<double>(al + 3)) *
                    laguerre_assoc(n, static_cast<double>(al), s) *
                    laguerre_assoc(n_prime, static_cast<double>(al), s);
    }
    return me_rho6_prefactor(n, n_prime, l, alpha) * integral;
}

inline double me_rho6_closed_form(long n, long n_prime, long l, double alpha) {
    const long al = std::labs(l);
    Rational integral = 0;
    for (long k = 0; k <= n; ++k) {
        const Rational ck = laguerre_coeff(n, al, k);
        for (long kp = 0; kp <= n_prime; ++kp)
            integral += ck * laguerre_coeff(n_prime, al, kp) * factorial(k + kp + al + 3);
    }
    return me_rho6_prefactor(n, n_prime, l, alpha) * to_double(integral);
}

inline MatrixElement me_rho6(long n, long n_prime, long l, double alpha) {
    MatrixElement me;
    me.n = n;
    me.n_prime = n_prime;
    me.l = l;
    me.quadrature = me_rho6_quadrature(n, n_prime, l, alpha);
    me.closed_form = me_rho6_closed_form(n, n_prime, l, alpha);
    return me;
}

// ---------------------------------------------------------------------------
// Radial grid diagonalization: conservative second-order finite volumes on a
// uniform grid rho_j = j h for the flux form of the radial equation,
//   -hbar^2/2m (rho R')' + (hbar^2 l^2 / 2m rho + rho V) R = E rho R.
// The axis cell [0, h/2] carries the j = 0 unknown for l = 0 (R(0) finite,
// zero flux through the axis); l > 0 gets Dirichlet at the origin. The
// diagonal weight B = diag(cell measure) turns the generalized problem into a
// symmetric tridiagonal one via B^{-1/2} A B^{-1/2}.
// ---------------------------------------------------------------------------

struct RadialPotential {
    std::function<double(double)> V;
    double rho_min = 1e-6;  // used only by the residual evaluator
    double rho_max = 20.0;
};

// Oscillator + inverted sextic (the regularized Kepler image). For lambda > 0
// the domain is cut at the barrier top of V.
inline RadialPotential sextic_oscillator_potential(const PhysParams& p, double omega0) {
    RadialPotential pot;
    const double a = 0.5 * p.m * omega0 * omega0;
    const double b = p.lambda * p.lambda * p.m / (32.0 * p.c * p.c);
    pot.V = [a, b](double rho) {
        const double r2 = rho * rho;
        return a * r2 - b * r2 * r2 * r2;
    };
    const double alpha = p.m * omega0 / p.hbar;
    pot.rho_min = 1e-5 / std::sqrt(alpha);
    if (p.lambda > 0.0) {
        // V' = 0 at rho^4 = 16 c^2 omega0^2 / (3 lambda^2)
        pot.rho_max = std::pow(16.0 * p.c * p.c * omega0 * omega0 /
                                   (3.0 * p.lambda * p.lambda),
                               0.25);
    } else {
        pot.rho_max = 14.0 / std::sqrt(alpha);
    }
    return pot;
}

// Hydrogen-like -k/r, optionally with the inverted harmonic damping term.
inline RadialPotential hydrogen_potential(const PhysParams& p, double k,
                                          double r_max = 0.0) {
    RadialPotential pot;
    const double lam2m8 = 0.125 * p.lambda * p.lambda * p.m;
    pot.V = [k, lam2m8](double r) { return -k / r - lam2m8 * r * r; };
    pot.rho_min = 1e-6;
    pot.rho_max = (r_max > 0.0) ? r_max : 60.0;
    return pot;
}

struct GridDiagResult {
    std::vector<double> eigenvalues;  // refined (Richardson) estimates
    double refinement_error = 0.0;    // max |refined - finest| over returned levels
};

namespace detail {

// number of eigenvalues of the symmetric tridiagonal (diag, sub) below sigma,
// by the Sturm sequence of the shifted LDL^T factorization
inline int sturm_count(const std::vector<double>& diag, const std::vector<double>& sub,
                       double sigma) {
    int cnt = 0;
    double d = diag[0] - sigma;
    if (d < 0.0) ++cnt;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0) d = -1e-150;
        d = diag[i] - sigma - sub[i - 1] * sub[i - 1] / d;
        if (d < 0.0) ++cnt;
    }
    return cnt;
}

inline std::vector<double> tridiag_eigen_lowest(const RadialPotential& pot,
                                                const PhysParams& p, long l, int n_cells,
                                                int n_want) {
    const double h = pot.rho_max / n_cells;
    const double kin = p.hbar * p.hbar / (2.0 * p.m);
    const double cent = kin * static_cast<double>(l) * static_cast<double>(l);
    const int j0 = (l == 0) ? 0 : 1;  // axis unknown only for the regular channel
    const int n = n_cells - j0;       // Dirichlet at rho_max drops node n_cells

    std::vector<double> diag(n), sub(n - 1), bw(n);
    for (int i = 0; i < n; ++i) {
        const int j = i + j0;
        const double rho = j * h;
        const double a_lo = (j == 0) ? 0.0 : kin * (j - 0.5) * h;
        const double a_hi = kin * (j + 0.5) * h;
        double pj, bj;
        if (j == 0) {
            // axis cell [0, h/2]; 4-pt Gauss for the potential (exact for -k/r)
            static const double gx[4] = {0.06943184420297371, 0.33000947820757187,
                                         0.66999052179242813, 0.93056815579702629};
            static const double gw[4] = {0.17392742256872693, 0.32607257743127307,
                                         0.32607257743127307, 0.17392742256872693};
            pj = 0.0;
            for (int g = 0; g < 4; ++g) {
                const double rg = 0.5 * h * gx[g];
                pj += 0.5 * h * gw[g] * rg * pot.V(rg);
            }
            bj = h * h / 8.0;
        } else {
            // exact centrifugal cell integral, midpoint for rho V
            pj = cent * std::log((j + 0.5) / (j - 0.5)) + rho * pot.V(rho) * h;
            bj = rho * h;
        }
        diag[i] = ((a_lo + a_hi) / h + pj) / bj;
        bw[i] = bj;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const int j = i + j0;
        sub[i] = -kin * (j + 0.5) / std::sqrt(bw[i] * bw[i + 1]);
    }

    // Gershgorin bounds, then bisection per eigenvalue
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(sub[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(sub[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    std::vector<double> ev;
    for (int k = 0; k < std::min(n_want, n); ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && b - a > 1e-15 * (std::abs(a) + std::abs(b) + 1.0);
             ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, sub, mid) > k)
                b = mid;
            else
                a = mid;
        }
        ev.push_back(0.5 * (a + b));
    }
    return ev;
}

}  // namespace detail

inline GridDiagResult grid_diag(const RadialPotential& pot, const PhysParams& p, long l,
                                int n_want = 4, int n_grid = 4000) {
    l = std::labs(l);
    auto coarse = detail::tridiag_eigen_lowest(pot, p, l, n_grid, n_want);
    auto fine = detail::tridiag_eigen_lowest(pot, p, l, 2 * n_grid, n_want);
    GridDiagResult res;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        // h -> h/2 at matched endpoints; second-order scheme
        const double refined = (4.0 * fine[i] - coarse[i]) / 3.0;
        res.eigenvalues.push_back(refined);
        res.refinement_error = std::max(res.refinement_error, std::abs(refined - fine[i]));
    }
    if (res.refinement_error > 1e-4)
        throw NonConvergence("grid_diag: refinement disagreement " +
                             std::to_string(res.refinement_error));
    return res;
}

// ---------------------------------------------------------------------------
// Residual of a trial radial eigenpair under the (4th-order stencil) finite
// difference operator on the log grid: ||H psi - E psi|| / ||E psi||.
// ---------------------------------------------------------------------------

inline double schrodinger_residual(const std::function<double(double)>& radial,
                                   const RadialPotential& pot, const PhysParams& p,
                                   long l, double E, int n_grid = 40000) {
    l = std::labs(l);
    const double x0 = std::log(pot.rho_min);
    const double x1 = std::log(pot.rho_max);
    const double h = (x1 - x0) / (n_grid - 1);
    const double kin = p.hbar * p.hbar / (2.0 * p.m);
    const double cent = kin * static_cast<double>(l) * static_cast<double>(l);

    std::vector<double> f(n_grid), rho(n_grid);
    for (int j = 0; j < n_grid; ++j) {
        const double x = x0 + j * h;
        rho[j] = std::exp(x);
        f[j] = radial(rho[j]);
    }
    double num = 0.0, den = 0.0;
    for (int j = 2; j + 2 < n_grid; ++j) {
        const double fxx = (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] +
                            16.0 * f[j + 1] - f[j + 2]) /
                           (12.0 * h * h);
        const double w = rho[j] * rho[j];
        const double lhs = -kin * fxx + (cent + w * pot.V(rho[j])) * f[j];
        const double rhs = E * w * f[j];
        num += (lhs - rhs) * (lhs - rhs);
        den += rhs * rhs;
    }
    return std::sqrt(num / den);
}

// ---------------------------------------------------------------------------
// Appendix identity: the transformed-frame Hamiltonian equals the explicitly
// time-dependent one plus dF2/dt, with F2 = x_i e^{lambda t/2} P_{X_i}.
// Pointwise and algebraic; any violation is roundoff.
// ---------------------------------------------------------------------------

// (x, p) are damped-frame coordinates and canonical momenta at time t.
inline double canonical_identity_violation(double x1, double x2, double p1, double p2,
                                           double t, const PhysParams& p) {
    const double el = std::exp(0.5 * p.lambda * t);
    const double X1 = x1 * el, X2 = x2 * el;
    const double P1 = p1 / el, P2 = p2 / el;
    const double R = std::hypot(X1, X2);
    if (R == 0.0) throw CollisionSingularity("canonical check at r = 0");
    const double lhs = (P1 * P1 + P2 * P2) / (2.0 * p.m) +
                       0.5 * p.lambda * (X1 * P1 + X2 * P2) - p.k / R;
    const double r = std::hypot(x1, x2);
    const double H_bck = std::exp(-p.lambda * t) * (p1 * p1 + p2 * p2) / (2.0 * p.m) -
                         p.k * std::exp(-0.5 * p.lambda * t) / r;
    const double dF2_dt = 0.5 * p.lambda * (x1 * el * P1 + x2 * el * P2);
    return std::abs(lhs - (H_bck + dF2_dt));
}

// Max violation along a damped-Kepler trajectory; velocities are converted to
// BCK canonical momenta p_i = m e^{lambda t} xdot_i.
inline double canonical_check(const Trajectory& tr) {
    if (tr.frame != Frame::DampedKepler)
        throw FrameMismatch("canonical_check expects a damped-Kepler trajectory");
    const PhysParams& p = tr.params;
    double worst = 0.0;
    for (const auto& st : tr.samples) {
        const double el = std::exp(p.lambda * st.s);
        worst = std::max(worst, canonical_identity_violation(
                                    st.q1, st.q2, p.m * el * st.v1, p.m * el * st.v2,
                                    st.s, p));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Non-inertial chain-rule check. For f(X, t) and its pullback
// g(x, t~) = f(x e^{lambda t~/2}, t~) we compare df/dt|_X against
//   printed:  dg/dt~ - (lambda/2) sum_i dg/dx_i
//   weighted: dg/dt~ - (lambda/2) sum_i x_i dg/dx_i
// Derivatives via complex step, so both errors are exact to roundoff.
// ---------------------------------------------------------------------------

struct ChainRuleReport {
    double printed_relation_err = 0.0;
    double weighted_relation_err = 0.0;
};

// f must be analytic: callable on complex arguments.
template <typename F>
ChainRuleReport chainrule_check(const F& f, double lambda,
                                const std::vector<std::array<double, 3>>& points) {
    using C = std::complex<double>;
    const double hs = 1e-100;
    ChainRuleReport rep;
    for (const auto& pt : points) {
        const double X1 = pt[0], X2 = pt[1], t = pt[2];
        const double x1 = X1 * std::exp(-0.5 * lambda * t);
        const double x2 = X2 * std::exp(-0.5 * lambda * t);

        auto g = [&](C a, C b, C tt) {
            const C e = std::exp(0.5 * lambda * tt);
            return f(a * e, b * e, tt);
        };
        const double df_dt = std::imag(f(C(X1), C(X2), C(t, hs))) / hs;
        const double dg_dt = std::imag(g(C(x1), C(x2), C(t, hs))) / hs;
        const double dg_dx1 = std::imag(g(C(x1, hs), C(x2), C(t))) / hs;
        const double dg_dx2 = std::imag(g(C(x1), C(x2, hs), C(t))) / hs;

        const double printed = dg_dt - 0.5 * lambda * (dg_dx1 + dg_dx2);
        const double weighted = dg_dt - 0.5 * lambda * (x1 * dg_dx1 + x2 * dg_dx2);
        rep.printed_relation_err = std::max(rep.printed_relation_err,
                                            std::abs(df_dt - printed));
        rep.weighted_relation_err = std::max(rep.weighted_relation_err,
                                             std::abs(df_dt - weighted));
    }
    return rep;
}

}  // namespace dcf::oracle
