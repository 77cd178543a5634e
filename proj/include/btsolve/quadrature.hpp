#ifndef BTSOLVE_QUADRATURE_HPP
#define BTSOLVE_QUADRATURE_HPP

// Globally adaptive Gauss-Kronrod (G7, K15) quadrature over a real
// interval, for real- or complex-valued integrands.  Never throws: the
// achieved error estimate is reported and the caller decides.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace btsolve {

template <class V>
struct QuadResult {
    V value{};
    double abs_error = 0.0;
    int panels = 0;
};

namespace detail {

// Kronrod-15 abscissae and weights on [-1, 1]; odd indices are the
// embedded Gauss-7 points.
inline constexpr double kGK15X[15] = {
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691,
    -0.7415311855993944, -0.5860872354676911, -0.4058451513773972,
    -0.2077849550078985, 0.0,                 0.2077849550078985,
    0.4058451513773972,  0.5860872354676911,  0.7415311855993944,
    0.8648644233597691,  0.9491079123427585,  0.9914553711208126};

inline constexpr double kGK15W[15] = {
    0.022935322010529225, 0.06309209262997856, 0.10479001032225019,
    0.14065325971552592,  0.1690047266392679,  0.19035057806478542,
    0.20443294007529889,  0.20948214108472783, 0.20443294007529889,
    0.19035057806478542,  0.1690047266392679,  0.14065325971552592,
    0.10479001032225019,  0.06309209262997856, 0.022935322010529225};

inline constexpr double kG7W[7] = {
    0.12948496616886969, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,  0.3818300505051189, 0.2797053914892767,
    0.12948496616886969};

template <class V, class F>
void gk15_panel(F&& f, double a, double b, V* integral, double* err) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    V k15{};
    V g7{};
    for (int i = 0; i < 15; ++i) {
        const V fv = f(mid + half * kGK15X[i]);
        k15 += kGK15W[i] * fv;
        if (i % 2 == 1) g7 += kG7W[i / 2] * fv;
    }
    *integral = half * k15;
    const double diff = std::abs(half * (k15 - g7));
    // standard scaled estimate, conservative floor of the raw difference
    *err = std::max(std::pow(200.0 * diff, 1.5), diff * 1e-4);
    if (!std::isfinite(diff)) *err = std::numeric_limits<double>::infinity();
}

template <class V>
struct Panel {
    double a, b, err;
    V val;
    bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace detail

/// Integrate f over [a, b] to absolute tolerance abs_tol with at most
/// max_panels subdivisions.
template <class V, class F>
QuadResult<V> gk_adaptive(F&& f, double a, double b, double abs_tol,
                          int max_panels = 2000) {
    QuadResult<V> out;
    if (a == b) return out;

    std::vector<detail::Panel<V>> heap;
    auto push = [&](double lo, double hi) -> double {
        detail::Panel<V> p{lo, hi, 0.0, V{}};
        detail::gk15_panel<V>(f, lo, hi, &p.val, &p.err);
        heap.push_back(p);
        std::push_heap(heap.begin(), heap.end());
        return p.err;
    };

    double total_err = push(a, b);
    int panels = 1;
    while (total_err > abs_tol && panels < max_panels &&
           std::isfinite(total_err)) {
        std::pop_heap(heap.begin(), heap.end());
        const detail::Panel<V> worst = heap.back();
        heap.pop_back();
        total_err -= worst.err;
        if (worst.b - worst.a < 1e-15 * (std::fabs(worst.a) + std::fabs(worst.b) + 1.0)) {
            // cannot subdivide further; keep the panel as-is
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            total_err += worst.err;
            break;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        total_err += push(worst.a, mid);
        total_err += push(mid, worst.b);
        ++panels;
    }

    V sum{};
    double err = 0.0;
    for (const auto& p : heap) {
        sum += p.val;
        err += p.err;
    }
    out.value = sum;
    out.abs_error = err;
    out.panels = panels;
    return out;
}

}  // namespace btsolve

#endif  // BTSOLVE_QUADRATURE_HPP
