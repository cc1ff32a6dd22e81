#include <catch2/catch_amalgamated.hpp>

#include "dcf/oracle.hpp"
#include "dcf/wavefn.hpp"

using namespace dcf;
using namespace dcf::wavefn;

TEST_CASE("psi0 printed values") {
    CHECK(psi0_osc(0, 0, 1.0, 0.0, 0.0).real() == Catch::Approx(1.0 / std::sqrt(2.0 * M_PI)));
    CHECK(std::abs(psi0_osc(2, 1, 1.0, 0.0, 0.3)) == 0.0);  // rho^{|l|} factor
    CHECK(std::abs(psi0_osc(1, 0, 1.0, 1.0, 0.0)) ==
          Catch::Approx(0.0).margin(1e-15));  // node of 1F1(-1;1;x) at x = 1
}

TEST_CASE("angular factor and parity") {
    const double rho = 0.8;
    for (long l : {-3L, -2L, 1L, 2L, 5L}) {
        const auto a = psi0_osc(1, l, 1.0, rho, 0.4);
        const auto b = psi0_osc(1, l, 1.0, rho, 0.4 + M_PI);
        if (l % 2 == 0)
            CHECK(std::abs(a - b) < 1e-14);
        else
            CHECK(std::abs(a + b) < 1e-14);
    }
}

TEST_CASE("quadrature Gram matrix of normalized states is the identity") {
    const double alpha = 1.0;
    const auto q = oracle::gauss_laguerre(40);
    for (long l : {0L, 1L}) {
        for (long n = 0; n <= 4; ++n)
            for (long m = 0; m <= 4; ++m) {
                // radial overlap in s = alpha rho^2: rho drho = ds/(2 alpha);
                // the radial product carries e^{-s}, cancelled against the
                // Gauss-Laguerre weight
                double g = 0.0;
                for (std::size_t i = 0; i < q.nodes.size(); ++i) {
                    const double s = q.nodes[i];
                    const double rho = std::sqrt(s / alpha);
                    const double fn = psi0_osc_radial(n, l, alpha, rho);
                    const double fm = psi0_osc_radial(m, l, alpha, rho);
                    g += q.weights[i] * std::exp(s) * fn * fm * (0.5 / alpha);
                }
                g /= std::sqrt(psi0_osc_norm2(n, l, alpha) * psi0_osc_norm2(m, l, alpha));
                CHECK(g == Catch::Approx(n == m ? 1.0 : 0.0).margin(1e-8));
            }
    }
}

TEST_CASE("psi1 vanishes at lambda = 0 and has the exact 3-term band at n = 0") {
    PhysParams p;
    CHECK(std::abs(psi1_osc(0, 0, p, 1.0, 1.0, 0.7, 0.2)) == 0.0);

    p.lambda = 0.1;
    // band structure: only n' = 1, 2, 3 contribute; adding them back by hand
    // from the oracle matrix elements reproduces the sum
    const double rho = 0.9, phi = 0.3;
    std::complex<double> manual = 0.0;
    for (long np = 1; np <= 3; ++np) {
        const double me = oracle::me_rho6_closed_form(np, 0, 0, 1.0);
        const double coeff =
            -p.lambda * p.lambda * p.m / (32.0 * p.c * p.c) * me / (2.0 * (0.0 - np));
        manual += coeff * psi0_osc(np, 0, 1.0, rho, phi, true);
    }
    const auto sum = psi1_osc(0, 0, p, 1.0, 1.0, rho, phi,
                              CorrectionMethod::OracleMatrixElement);
    CHECK(std::abs(sum - manual) < 1e-15);
    // matrix elements beyond the band vanish
    CHECK(std::abs(oracle::me_rho6_closed_form(4, 0, 0, 1.0)) < 1e-12);
    CHECK(std::abs(oracle::me_rho6_closed_form(5, 0, 0, 1.0)) < 1e-12);
}

TEST_CASE("psi1 is orthogonal to psi0") {
    PhysParams p;
    p.lambda = 0.1;
    const auto q = oracle::gauss_laguerre(40);
    double overlap = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double s = q.nodes[i];
        const double rho = std::sqrt(s);
        const double f0 = psi0_osc(0, 0, 1.0, rho, 0.0, true).real();
        const double f1 =
            psi1_osc(0, 0, p, 1.0, 1.0, rho, 0.0, CorrectionMethod::OracleMatrixElement)
                .real();
        overlap += q.weights[i] * std::exp(s) * f0 * f1 * 0.5;
    }
    overlap *= 2.0 * M_PI;  // angular integral of |e^{i0}|^2/(2pi) normalization
    CHECK(std::abs(overlap) < 1e-10);
}

TEST_CASE("hydrogen-like printed values") {
    const double beta = 0.5;
    CHECK(psi_hatom(0, 0, beta, 2.0, 0.0).real() ==
          Catch::Approx(std::exp(-1.0) / std::sqrt(2.0 * M_PI)));
    // node of 1F1(-1;1;2 beta r) at r = 1/(2 beta)
    CHECK(std::abs(psi_hatom(1, 0, beta, 1.0 / (2.0 * beta), 0.0)) <
          1e-15);
}

TEST_CASE("Bohlin-mapped even oscillator states equal psi_hatom pointwise") {
    const double beta = 0.5, alpha = 2.0 * beta;
    for (long l : {0L, 2L, 4L, -2L, -4L}) {
        const long n_rho = 0;
        for (double rho : {0.3, 0.8, 1.4})
            for (double phi : {0.1, 2.0}) {
                const auto osc = psi0_osc(n_rho, l, alpha, rho, phi);
                const auto hyd = psi_hatom(n_rho / 2, l / 2, beta, rho * rho, 2.0 * phi);
                CHECK(std::abs(osc - hyd) < 1e-12);
            }
    }
}

TEST_CASE("single-valuedness of the mapped image") {
    // theta = 2 phi: the mapped function is 2pi-periodic in theta iff l is even
    const double rho = 0.7;
    for (long l : {1L, 3L}) {
        const auto a = psi0_osc(0, l, 1.0, rho, 0.0);
        const auto b = psi0_osc(0, l, 1.0, rho, M_PI);  // theta wraps by 2pi
        CHECK(std::abs(a - b) > 1e-3);                  // not single-valued
    }
    for (long l : {0L, 2L}) {
        const auto a = psi0_osc(0, l, 1.0, rho, 0.0);
        const auto b = psi0_osc(0, l, 1.0, rho, M_PI);
        CHECK(std::abs(a - b) < 1e-14);
    }
}

TEST_CASE("gauge restoration is a pure phase") {
    PhysParams p;
    p.lambda = 0.3;
    for (double r : {0.2, 1.0, 3.7}) {
        const auto psi = psi_hatom(1, 1, 0.5, r, 0.8);
        const auto phi_v = gauge_restore(psi, r, p.lambda, p.m, p.hbar);
        CHECK(std::abs(phi_v) == Catch::Approx(std::abs(psi)).epsilon(1e-14));
        const double want = -p.m * p.lambda * r * r / (4.0 * p.hbar);
        CHECK(std::remainder(std::arg(phi_v / psi) - want, 2.0 * M_PI) ==
              Catch::Approx(0.0).margin(1e-12));
    }
    // lambda = 0: identity
    const auto psi = psi_hatom(0, 0, 0.5, 1.0, 0.0);
    CHECK(gauge_restore(psi, 1.0, 0.0, 1.0, 1.0) == psi);
}
