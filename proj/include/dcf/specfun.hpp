#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dcf/errors.hpp"

namespace dcf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) {
    return static_cast<double>(q);
}

// Gamma(n) = (n-1)! for positive integer n.
inline Rational gamma_int(long n) {
    if (n <= 0) throw std::domain_error("gamma_int: n must be >= 1");
    BigInt f = 1;
    for (long i = 2; i < n; ++i) f *= i;
    return Rational(f);
}

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    return gamma_int(n + 1);
}

// Falling factorial a (a-1) ... (a-j+1).
inline Rational falling_factorial(long a, long j) {
    if (j < 0) throw std::domain_error("falling_factorial: j must be >= 0");
    BigInt p = 1;
    for (long i = 0; i < j; ++i) p *= BigInt(a - i);
    return Rational(p);
}

// Generalized binomial coefficient, valid for negative upper index.
inline Rational gen_binomial(long a, long j) {
    if (j < 0) throw std::domain_error("gen_binomial: j must be >= 0");
    return falling_factorial(a, j) / factorial(j);
}

// Pochhammer (a)_j.
inline Rational pochhammer(long a, long j) {
    BigInt p = 1;
    for (long i = 0; i < j; ++i) p *= BigInt(a + i);
    return Rational(p);
}

// Terminating 1F1(-n; b; x) = sum_{j<=n} (-n)_j / ((b)_j j!) x^j.
inline double hyp1f1_terminating(long n, double b, double x) {
    if (n < 0) throw std::domain_error("hyp1f1_terminating: n must be >= 0");
    double sum = 1.0;
    double term = 1.0;
    for (long j = 1; j <= n; ++j) {
        const double bj = b + static_cast<double>(j - 1);
        if (bj == 0.0)
            throw std::domain_error("hyp1f1_terminating: denominator parameter hits 0");
        term *= static_cast<double>(-(n - j + 1)) / bj * x / static_cast<double>(j);
        sum += term;
    }
    return sum;
}

// binom(a, j_pref) * 3F2(-n, a2, a3; b1, -a; 1) with the (-a)_j Pochhammer in the
// denominator cancelled symbolically against the falling factorial of the binomial.
// The individual factors can be 0 and singular for a >= 0; the product is finite
// whenever the surviving denominator factors are nonzero.
//
// Term j of the combined product:
//   [(-n)_j (a2)_j (a3)_j / ((b1)_j j!)] * (-1)^j * R_j / j_pref!
// where R_j = ff(a, j_pref) / ff(a, j), reduced before any division:
//   j <= j_pref : R_j = prod_{i=j}^{j_pref-1} (a - i)
//   j >  j_pref : R_j = 1 / prod_{i=j_pref}^{j-1} (a - i)
inline Rational hyp3f2_with_binomial_prefactor(long n, long a2, long a3, long b1,
                                               long b2, long prefactor_a,
                                               long prefactor_j) {
    if (n < 0) throw std::domain_error("hyp3f2: series order must be >= 0");
    if (b2 != -prefactor_a)
        throw std::domain_error(
            "hyp3f2: symbolic cancellation requires b2 == -prefactor_a");
    const long a = prefactor_a;
    const Rational jpref_fact = factorial(prefactor_j);
    Rational sum = 0;
    for (long j = 0; j <= n; ++j) {
        Rational num = pochhammer(-n, j) * pochhammer(a2, j) * pochhammer(a3, j);
        Rational den = pochhammer(b1, j) * factorial(j) * jpref_fact;
        if (den == 0)
            throw NonCancellableSingularity(
                "hyp3f2: lower parameter Pochhammer vanishes and does not cancel");
        Rational ratio;
        if (j <= prefactor_j) {
            BigInt p = 1;
            for (long i = j; i < prefactor_j; ++i) p *= BigInt(a - i);
            ratio = Rational(p);
        } else {
            BigInt p = 1;
            for (long i = prefactor_j; i < j; ++i) p *= BigInt(a - i);
            if (p == 0)
                throw NonCancellableSingularity(
                    "hyp3f2: zero denominator survives cancellation at j=" +
                    std::to_string(j));
            ratio = Rational(1) / Rational(p);
        }
        const int sign = (j % 2 == 0) ? 1 : -1;
        sum += sign * num * ratio / den;
    }
    return sum;
}

// Associated Laguerre L_n^a(x) via the three-term recurrence.
inline double laguerre_assoc(long n, double a, double x) {
    if (n < 0) throw std::domain_error("laguerre_assoc: n must be >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + a - x;
    for (long k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double lnext = ((2.0 * dk - 1.0 + a - x) * l - (dk - 1.0 + a) * lm1) / dk;
        lm1 = l;
        l = lnext;
    }
    return l;
}

// Coefficient of s^j in L_n^a(s), exact: (-1)^j binom(n+a, n-j) / j!  (integer a).
inline Rational laguerre_coeff(long n, long a, long j) {
    Rational c = gen_binomial(n + a, n - j) / factorial(j);
    return (j % 2 == 0) ? c : -c;
}

}  // namespace dcf
