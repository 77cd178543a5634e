#ifndef BTSOLVE_DOUBLE_DOUBLE_HPP
#define BTSOLVE_DOUBLE_DOUBLE_HPP

// Compensated double-double arithmetic (~31 significant digits) used to
// absorb cancellation in badly conditioned series.  Only the operations
// the series kernels need are provided.

#include <cmath>
#include <complex>

namespace btsolve {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace detail {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DD dd_add(const DD& a, const DD& b) {
    DD s = detail::two_sum(a.hi, b.hi);
    DD t = detail::two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    DD r = detail::quick_two_sum(s.hi, lo);
    lo = r.lo + t.lo;
    return detail::quick_two_sum(r.hi, lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(const DD& a, double b) {
    DD p = detail::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    DD q = detail::quick_two_sum(q1, q2);
    return dd_add(q, DD(q3));
}

inline DD dd_div(const DD& a, double b) { return dd_div(a, DD(b)); }

inline double dd_abs(const DD& a) { return std::fabs(a.value()); }

/// Complex number with double-double components.
struct CDD {
    DD re;
    DD im;

    CDD() = default;
    CDD(const DD& r, const DD& i) : re(r), im(i) {}
    CDD(double r, double i = 0.0) : re(r), im(i) {}
    explicit CDD(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline CDD cdd_add(const CDD& a, const CDD& b) {
    return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline CDD cdd_sub(const CDD& a, const CDD& b) {
    return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)};
}

inline CDD cdd_mul(const CDD& a, const CDD& b) {
    DD rr = dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
    DD ii = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
    return {rr, ii};
}

inline CDD cdd_mul(const CDD& a, const DD& s) {
    return {dd_mul(a.re, s), dd_mul(a.im, s)};
}

inline CDD cdd_mul(const CDD& a, double s) {
    return {dd_mul(a.re, s), dd_mul(a.im, s)};
}

inline CDD cdd_div(const CDD& a, double s) {
    return {dd_div(a.re, DD(s)), dd_div(a.im, DD(s))};
}

inline CDD cdd_div(const CDD& a, const DD& s) {
    return {dd_div(a.re, s), dd_div(a.im, s)};
}

inline double cdd_abs(const CDD& a) { return std::abs(a.value()); }

// split constants (value = hi + lo exactly to ~32 digits)
inline constexpr DD kDDSqrtPi{1.7724538509055161e+00, -7.6665864998257987e-17};
inline constexpr DD kDDTwoOverSqrtPi{1.1283791670955126e+00, 1.5335459613165881e-17};

}  // namespace btsolve

#endif  // BTSOLVE_DOUBLE_DOUBLE_HPP
