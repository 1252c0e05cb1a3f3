#include "heightbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace heightbound {

namespace {

constexpr int kGridPoints = 10000;
constexpr double kGridLow = 1e-3;
constexpr double kGridHigh = 1e3;

void check_a(double a) {
    if (!(a > 0.0 && a < 0.5))
        throw std::domain_error("parameter a must lie strictly in (0, 1/2)");
}

void check_ratio(double ratio) {
    if (!(ratio > 0.0 && ratio <= 1.0))
        throw std::domain_error("ratio R must lie in (0, 1]");
}

struct LogGrid {
    std::vector<double> x;
    std::vector<double> log_x;        // ln x
    std::vector<double> log_one_m;    // ln |1 - x^2|
    std::vector<double> log_one_p;    // ln (1 + x^2)
    std::vector<double> log_cap;      // ln max(1, x)
};

const LogGrid& log_grid() {
    static const LogGrid grid = [] {
        LogGrid g;
        g.x.resize(kGridPoints);
        g.log_x.resize(kGridPoints);
        g.log_one_m.resize(kGridPoints);
        g.log_one_p.resize(kGridPoints);
        g.log_cap.resize(kGridPoints);
        const double span = std::log(kGridHigh / kGridLow);
        for (int i = 0; i < kGridPoints; ++i) {
            const double x = kGridLow * std::exp(span * i / (kGridPoints - 1));
            const double m = std::fabs(1.0 - x * x);
            g.x[static_cast<size_t>(i)] = x;
            g.log_x[static_cast<size_t>(i)] = std::log(x);
            g.log_one_m[static_cast<size_t>(i)] = m > 0.0 ? std::log(m) : -1e300;
            g.log_one_p[static_cast<size_t>(i)] = std::log1p(x * x);
            g.log_cap[static_cast<size_t>(i)] = x > 1.0 ? std::log(x) : 0.0;
        }
        return g;
    }();
    return grid;
}

struct GoldenResult {
    double x;
    double value;
};

// golden-section maximizer on [lo, hi]; assumes a single interior max
GoldenResult golden_max(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - (hi - lo) * inv_phi;
    double d = lo + (hi - lo) * inv_phi;
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * (1.0 + std::fabs(lo)); ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = f(d);
        }
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, f(mid)};
}

// max of exp(u ln x + v ln s(x) - ln max(1,x)) over the log grid, where
// s is |1-x^2| (real axis) or 1+x^2 (imaginary-axis radius). Returns the
// refined maximum and its abscissa.
GoldenResult maximize_weighted(double u, double v, bool complex_axis) {
    const LogGrid& g = log_grid();
    const auto& ls = complex_axis ? g.log_one_p : g.log_one_m;
    int best = 0;
    double best_e = -1e300;
    for (int i = 0; i < kGridPoints; ++i) {
        const size_t k = static_cast<size_t>(i);
        const double e = u * g.log_x[k] + v * ls[k] - g.log_cap[k];
        if (e > best_e) {
            best_e = e;
            best = i;
        }
    }
    const double lo = g.x[static_cast<size_t>(std::max(0, best - 1))];
    const double hi = g.x[static_cast<size_t>(std::min(kGridPoints - 1, best + 1))];
    auto value = [u, v, complex_axis](double x) {
        const double s = complex_axis ? 1.0 + x * x : std::fabs(1.0 - x * x);
        return std::pow(x, u) * std::pow(s, v) / std::max(1.0, x);
    };
    return golden_max(value, lo, hi);
}

// grid-only exponent of the maximum; used by the exponent search where
// only comparisons between nearby (u, v) matter
double grid_log_max(double u, double v, bool complex_axis) {
    const LogGrid& g = log_grid();
    const auto& ls = complex_axis ? g.log_one_p : g.log_one_m;
    double best = -1e300;
    for (size_t k = 0; k < static_cast<size_t>(kGridPoints); ++k)
        best = std::max(best, u * g.log_x[k] + v * ls[k] - g.log_cap[k]);
    return best;
}

bool in_region(ExponentPair e) {
    return e.u >= -1e-12 && e.v >= -1e-12 && e.u + 2.0 * e.v <= 1.0 + 1e-12;
}

} // namespace

double f_value(std::complex<double> x, double a) {
    const double r = std::abs(x);
    if (r == 0.0)
        return 0.0;
    return std::pow(r, 0.5 - a) * std::pow(std::abs(1.0 - x * x), a);
}

double g_value(std::complex<double> x, double a) {
    const double r = std::abs(x);
    if (r == 0.0)
        throw std::domain_error("g_value undefined at x = 0");
    return f_value(x, a) / std::max(1.0, r);
}

LemmaParams lemma_params(double a) {
    check_a(a);
    LemmaParams lp;
    lp.a = a;
    lp.m_complex = std::pow(2.0, a);
    lp.m_real = std::pow(4.0 * a, a) * std::pow(1.0 - 2.0 * a, 0.25 - 0.5 * a) *
                std::pow(1.0 + 2.0 * a, -0.25 - 0.5 * a);
    lp.x1 = std::sqrt((1.0 - 2.0 * a) / (1.0 + 2.0 * a));
    lp.x2 = std::sqrt((1.0 + 2.0 * a) / (1.0 - 2.0 * a));
    return lp;
}

MaximaEstimate numeric_maxima(double a) {
    check_a(a);
    const auto real_max = maximize_weighted(0.5 - a, a, false);
    const auto cplx_max = maximize_weighted(0.5 - a, a, true);
    MaximaEstimate est;
    est.m_real = real_max.value;
    // g(x) = g(1/x) on the real axis: report the attaining point in (0, 1]
    est.x_real = real_max.x <= 1.0 ? real_max.x : 1.0 / real_max.x;
    est.m_complex = cplx_max.value;
    est.rho_complex = cplx_max.x;
    return est;
}

double optimal_a(double ratio) {
    check_ratio(ratio);
    // a = (1/2) (1 + 4^(1/R))^(-1/2), evaluated in logs so huge 4^(1/R)
    // cannot overflow for small R
    const double t = std::log(4.0) / ratio;        // ln 4^(1/R)
    const double log1p4 = t + std::log1p(std::exp(-t));
    return 0.5 * std::exp(-0.5 * log1p4);
}

double garza_bound(double ratio) {
    check_ratio(ratio);
    const double p = std::pow(2.0, 1.0 - 1.0 / ratio);
    return std::pow((p + std::sqrt(p * p + 4.0)) / 2.0, ratio / 2.0);
}

double schinzel_bound() {
    return std::sqrt((1.0 + std::sqrt(5.0)) / 2.0);
}

double bound_identity_chain(double ratio) {
    check_ratio(ratio);
    const LemmaParams lp = lemma_params(optimal_a(ratio));
    const double chain = std::pow(lp.m_real, -ratio) * std::pow(lp.m_complex, ratio - 1.0);
    return std::fabs(chain - garza_bound(ratio));
}

double generalized_bound(ExponentPair e, double ratio) {
    check_ratio(ratio);
    if (!in_region(e))
        throw std::domain_error("exponent pair outside {u >= 0, v >= 0, u + 2v <= 1}");
    const double mr = maximize_weighted(e.u, e.v, false).value;
    const double mc = maximize_weighted(e.u, e.v, true).value;
    return std::pow(mr, -ratio) * std::pow(mc, ratio - 1.0);
}

ExponentSearch optimize_exponents(double ratio) {
    check_ratio(ratio);

    // grid-level objective: -R ln M~_R + (R-1) ln M~_C from grid maxima
    auto approx = [ratio](double u, double v) {
        return -ratio * grid_log_max(u, v, false) + (ratio - 1.0) * grid_log_max(u, v, true);
    };

    ExponentSearch res;
    double best_val = -1e300;
    ExponentPair best{0.0, 0.0};
    for (int iu = 0; iu <= 100; ++iu) {
        const double u = 0.01 * iu;
        for (int iv = 0; 0.02 * iv <= 1.0 - u + 1e-12; ++iv) {
            const double v = 0.01 * iv;
            const double val = approx(u, v);
            if (val > best_val) {
                best_val = val;
                best = {u, v};
            }
        }
    }
    res.grid_best = best;
    res.grid_value = generalized_bound(best, ratio);

    for (double step : {1e-3, 1e-4}) {
        const ExponentPair center = best;
        for (int iu = -10; iu <= 10; ++iu) {
            for (int iv = -10; iv <= 10; ++iv) {
                ExponentPair e{center.u + step * iu, center.v + step * iv};
                if (e.u < 0.0)
                    e.u = 0.0;
                if (e.v < 0.0)
                    e.v = 0.0;
                if (!in_region(e))
                    continue;
                const double val = approx(e.u, e.v);
                if (val > best_val) {
                    best_val = val;
                    best = e;
                }
            }
        }
    }
    res.best = best;
    res.value = generalized_bound(best, ratio);

    // diagnostic: best value on the boundary edge u + 2v = 1
    double bval = -1e300;
    for (int iv = 0; iv <= 500; ++iv) {
        const double v = 0.001 * iv;
        const double u = 1.0 - 2.0 * v;
        if (u < 0.0)
            break;
        bval = std::max(bval, approx(u, v));
    }
    res.boundary_value = std::exp(bval);
    return res;
}

} // namespace heightbound
