#ifndef BTSOLVE_SPECIAL_HPP
#define BTSOLVE_SPECIAL_HPP

// Scalar special-function kernels: reciprocal gamma, the scaled
// complementary error function W(z) = exp(z^2) erfc(-z) on the complex
// plane, Fresnel integrals, Bessel J0, and convergence acceleration for
// alternating series.  Everything here is a pure function.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "btsolve/double_double.hpp"
#include "btsolve/errors.hpp"

namespace btsolve {

using Complex = std::complex<double>;

/// 1/Gamma(x), entire on the reals: exactly 0 at x = 0, -1, -2, ...
inline double rgamma(double x) {
    if (x > 0.5) {
        return 1.0 / std::tgamma(x);  // 1/inf -> 0 past the overflow point
    }
    const double m = std::round(x);
    const double r = x - m;  // r in [-1/2, 1/2]
    if (r == 0.0) return 0.0;
    const double sign = (static_cast<std::int64_t>(m) % 2 == 0) ? 1.0 : -1.0;
    const double sin_pi_x = sign * std::sin(std::numbers::pi * r);
    // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    return std::tgamma(1.0 - x) * sin_pi_x / std::numbers::pi;
}

namespace detail {

// Maclaurin series of erfcx(u) = exp(u^2) erfc(u) summed in double-double.
// Valid on the whole disk |u| <= 6.5; the dd accumulation absorbs the
// exp(|u|^2)-sized cancellation (worst case ~e^42 * 1e-32).
inline Complex erfcx_series_dd(Complex u) {
    const CDD uu(u);
    const CDD u2 = cdd_mul(uu, uu);
    CDD term_even(1.0, 0.0);
    CDD term_odd = cdd_mul(uu, kDDTwoOverSqrtPi);
    term_odd = {dd_neg(term_odd.re), dd_neg(term_odd.im)};
    CDD sum = cdd_add(term_even, term_odd);
    double peak = cdd_abs(sum);
    for (int i = 0; i < 260; ++i) {
        term_even = cdd_div(cdd_mul(term_even, u2), DD(double(i + 1)));
        term_odd = cdd_mul(cdd_mul(term_odd, u2), dd_div(DD(2.0), DD(double(2 * i + 3))));
        const CDD inc = cdd_add(term_even, term_odd);
        sum = cdd_add(sum, inc);
        const double mag = cdd_abs(inc);
        peak = std::max(peak, mag);
        if (mag < 1e-35 * peak && i > std::norm(u)) break;
    }
    return sum.value();
}

// Laplace continued fraction for erfcx(u), Re u >= 0, away from the
// imaginary axis.  Modified Lentz evaluation.
inline Complex erfcx_cf(Complex u, bool* converged) {
    const double tiny = 1e-290;
    Complex f = u, big_c = u, big_d = 0.0;
    *converged = false;
    for (int m = 1; m <= 400; ++m) {
        const double a = 0.5 * m;
        big_d = u + a * big_d;
        if (std::abs(big_d) < tiny) big_d = tiny;
        big_d = 1.0 / big_d;
        big_c = u + a / big_c;
        if (std::abs(big_c) < tiny) big_c = tiny;
        const Complex delta = big_c * big_d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            *converged = true;
            break;
        }
    }
    return 1.0 / (kDDSqrtPi.value() * f);
}

// Large-|u| expansion erfcx(u) ~ 1/(sqrt(pi) u) * sum_k (-1)^k (2k-1)!!/(2u^2)^k,
// optimally truncated; valid for |arg u| <= pi/2 (error ~ e^{-|u|^2}).
inline Complex erfcx_asymptotic(Complex u) {
    const Complex inv_2u2 = 1.0 / (2.0 * u * u);
    Complex term = 1.0, sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 64; ++k) {
        term *= -double(2 * k - 1) * inv_2u2;
        const double mag = std::abs(term);
        if (mag >= prev) break;  // divergence onset: stop at the smallest term
        sum += term;
        prev = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    return sum / (kDDSqrtPi.value() * u);
}

// erfcx on Re u >= 0, |u| > series radius.
inline Complex erfcx_right_halfplane_large(Complex u) {
    if (std::abs(std::arg(u)) <= std::numbers::pi / 3.0) {
        bool ok = false;
        const Complex v = erfcx_cf(u, &ok);
        if (ok) return v;
    }
    return erfcx_asymptotic(u);
}

}  // namespace detail

/// exp(u^2) erfc(u) for complex u (total up to overflow of the true value).
inline Complex erfcx(Complex u) {
    if (std::abs(u) <= 6.0) {
        Complex v = detail::erfcx_series_dd(u);
        if (u.imag() == 0.0) v = Complex(v.real(), 0.0);
        return v;
    }
    if (u.real() < 0.0) {
        // reflection erfcx(u) = 2 exp(u^2) - erfcx(-u)
        const Complex u2 = u * u;
        if (u2.real() > 705.0) {
            throw OverflowRangeError("erfcx: exp(u^2) exceeds double range");
        }
        Complex v = 2.0 * std::exp(u2) - detail::erfcx_right_halfplane_large(-u);
        if (u.imag() == 0.0) v = Complex(v.real(), 0.0);
        return v;
    }
    Complex v = detail::erfcx_right_halfplane_large(u);
    if (u.imag() == 0.0) v = Complex(v.real(), 0.0);
    return v;
}

/// W(z) = exp(z^2) erfc(-z), the building block of every closed form here.
/// Overflow of the true value (possible for large positive Re z) is thrown,
/// never silently returned.
inline Complex scaled_erfc(Complex z) { return erfcx(-z); }

struct FresnelValue {
    double s;
    double c;
};

/// Fresnel integrals S(x), C(x) (sin/cos of pi t^2 / 2 from 0 to x).
inline FresnelValue fresnel(double x) {
    if (x < 0.0) {
        const FresnelValue v = fresnel(-x);
        return {-v.s, -v.c};
    }
    if (x < 1.0) {
        // Maclaurin series of both integrals
        const double h = std::numbers::pi / 2.0 * x * x;
        const double h2 = h * h;
        double s = 0.0, c = 0.0, ts = h, tc = 1.0;
        for (int n = 0; n < 24; ++n) {
            s += ts / double(4 * n + 3);
            c += tc / double(4 * n + 1);
            ts *= -h2 / double((2 * n + 2) * (2 * n + 3));
            tc *= -h2 / double((2 * n + 1) * (2 * n + 2));
            if (std::fabs(ts) < 1e-20 && std::fabs(tc) < 1e-20) break;
        }
        return {x * s, x * c};
    }
    // C(x) + i S(x) = (1+i)/2 * erf(sqrt(pi)/2 (1-i) x); the exp(-w^2)
    // factor of erfc has unit modulus here, so no overflow is possible.
    const double half_sqrt_pi = 0.5 * kDDSqrtPi.value();
    const Complex w(half_sqrt_pi * x, -half_sqrt_pi * x);
    const double phase = std::numbers::pi / 2.0 * x * x;
    const Complex rot(std::cos(phase), std::sin(phase));
    const Complex val = 0.5 * Complex(1.0, 1.0) * (1.0 - rot * erfcx(w));
    return {val.imag(), val.real()};
}

/// Bessel function of the first kind, order zero.
inline double bessel_j0(double x) {
    x = std::fabs(x);
    if (x <= 13.5) {
        // ascending series in double-double (terms up to ~2e4 at x = 13.5)
        const DD q = detail::two_prod(x * 0.5, x * 0.5);
        DD term(1.0);
        DD sum(1.0);
        for (int k = 0; k < 80; ++k) {
            term = dd_div(dd_mul(term, q), DD(double(k + 1) * double(k + 1)));
            term = dd_neg(term);
            sum = dd_add(sum, term);
            if (dd_abs(term) < 1e-34 * std::max(1.0, dd_abs(sum)) && k > x) break;
        }
        return sum.value();
    }
    // Hankel expansion, optimally truncated (crossover chosen so the
    // smallest term is below 1e-13)
    const double inv_8x = 1.0 / (8.0 * x);
    const double r2 = 64.0 * x * x;
    double p = 1.0, pterm = 1.0, q = -inv_8x, qterm = -inv_8x;
    double prev_p = 1.0, prev_q = std::fabs(qterm);
    for (int k = 1; k <= 20; ++k) {
        const double f4 = double(4 * k);
        pterm *= -(f4 - 3.0) * (f4 - 3.0) * (f4 - 1.0) * (f4 - 1.0) /
                 (double(2 * k - 1) * double(2 * k) * r2);
        if (std::fabs(pterm) >= prev_p) break;
        p += pterm;
        prev_p = std::fabs(pterm);
        qterm *= -(f4 - 1.0) * (f4 - 1.0) * (f4 + 1.0) * (f4 + 1.0) /
                 (double(2 * k) * double(2 * k + 1) * r2);
        if (std::fabs(qterm) >= prev_q) break;
        q += qterm;
        prev_q = std::fabs(qterm);
    }
    const double chi = x - std::numbers::pi / 4.0;
    return std::sqrt(2.0 / (std::numbers::pi * x)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

struct AccelResult {
    double value;
    double error_estimate;
    int terms_used;
};

/// Sum of the alternating series sum_k (-1)^k a_k from the first n term
/// magnitudes, by the Cohen-Rodriguez Villegas-Zagier scheme.  The error
/// estimate decays like (3+sqrt(8))^-n for totally monotone sequences.
template <class Gen>
AccelResult accelerate_alternating(Gen&& a, int n) {
    const double base = 3.0 + std::sqrt(8.0);
    double d = std::pow(base, n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0, amax = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        const double ak = a(k);
        s += c * ak;
        amax = std::max(amax, std::fabs(ak));
        b *= (double(k) + n) * (double(k) - n) / ((k + 0.5) * (k + 1.0));
    }
    const double value = s / d;
    const double est =
        amax * (3.0 * std::exp(-double(n) * std::log(base)) +
                std::numeric_limits<double>::epsilon() * n);
    return {value, est, n};
}

namespace detail {

struct DDAccelResult {
    DD value;
    double error_estimate;
    double largest_term;
    int terms_used;
};

// Same scheme with double-double weights and accumulation, over
// precomputed term magnitudes.  Used where the terms have an exp-sized
// hump that plain double summation cannot survive.
inline DDAccelResult accelerate_alternating_dd(const std::vector<DD>& a, int n) {
    const double base = 3.0 + std::sqrt(8.0);
    DD d(1.0);
    for (int i = 0; i < n; ++i) d = dd_mul(d, DD(base));
    d = dd_mul(dd_add(d, dd_div(DD(1.0), d)), 0.5);
    DD b(-1.0), c = dd_neg(d), s(0.0);
    double amax = 0.0;
    for (int k = 0; k < n; ++k) {
        c = dd_sub(b, c);
        s = dd_add(s, dd_mul(c, a[static_cast<std::size_t>(k)]));
        amax = std::max(amax, dd_abs(a[static_cast<std::size_t>(k)]));
        b = dd_mul(b, dd_div(dd_mul(DD(double(k) + n), DD(double(k) - n)),
                             dd_mul(DD(k + 0.5), DD(k + 1.0))));
    }
    const DD value = dd_div(s, d);
    const double est = amax * (3.0 * std::exp(-double(n) * std::log(base)) + 1e-30 * n);
    return {value, est, amax, n};
}

}  // namespace detail

}  // namespace btsolve

#endif  // BTSOLVE_SPECIAL_HPP
