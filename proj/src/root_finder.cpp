#include "heightbound/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heightbound {

namespace {

using cplx = std::complex<double>;

std::vector<double> to_double_coeffs(const IntPoly& p) {
    std::vector<double> c(p.coeffs().size());
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = p.coeffs()[k].get_d();
    return c;
}

cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc(c.back(), 0.0);
    for (size_t k = c.size() - 1; k-- > 0;)
        acc = acc * z + c[k];
    return acc;
}

cplx horner_derivative(const std::vector<double>& c, cplx z) {
    cplx acc(c.back() * static_cast<double>(c.size() - 1), 0.0);
    for (size_t k = c.size() - 1; k-- > 1;)
        acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

double residual_at(const std::vector<double>& c, cplx z) {
    const double dp = std::abs(horner_derivative(c, z));
    if (dp == 0.0)
        return std::abs(horner(c, z)) > 0.0 ? 1.0 : 0.0;
    return std::abs(horner(c, z)) / (dp * (1.0 + std::abs(z)));
}

void newton_polish(const std::vector<double>& c, std::vector<cplx>& z, int passes) {
    for (auto& zi : z) {
        for (int it = 0; it < passes; ++it) {
            cplx dp = horner_derivative(c, zi);
            if (dp == cplx(0.0, 0.0))
                break;
            cplx step = horner(c, zi) / dp;
            zi -= step;
            if (std::abs(step) <= 1e-17 * (1.0 + std::abs(zi)))
                break;
        }
    }
}

// fixed irrational angular offset; breaks root symmetries in the start circle
constexpr double kAngularOffset = 0.61803398874989485;
constexpr int kIterationCap = 200;

} // namespace

int RootSet::real_count() const {
    int n = 0;
    for (bool f : real_flags)
        n += f ? 1 : 0;
    return n;
}

double cauchy_bound(const IntPoly& p) {
    if (p.degree() < 1)
        throw std::domain_error("cauchy_bound needs degree >= 1");
    const double lead = std::abs(p.leading().get_d());
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k)
        m = std::max(m, std::abs(p[k].get_d()));
    return 1.0 + m / lead;
}

std::vector<cplx> aberth_roots(const IntPoly& p) {
    const int n = p.degree();
    if (n < 1)
        throw std::domain_error("aberth_roots needs degree >= 1");
    const auto c = to_double_coeffs(p);

    std::vector<cplx> z(static_cast<size_t>(n));
    if (n == 1) {
        z[0] = cplx(-c[0] / c[1], 0.0);
        return z;
    }

    const double radius = 0.5 * cauchy_bound(p);
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n + kAngularOffset;
        z[static_cast<size_t>(j)] = std::polar(radius, theta);
    }

    for (int iter = 0; iter < kIterationCap; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx& zi = z[static_cast<size_t>(i)];
            cplx dp = horner_derivative(c, zi);
            if (dp == cplx(0.0, 0.0)) {
                zi += cplx(1e-8 * (1.0 + std::abs(zi)), 1e-8);
                dp = horner_derivative(c, zi);
            }
            const cplx newton = horner(c, zi) / dp;
            cplx repulsion(0.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i)
                    repulsion += 1.0 / (zi - z[static_cast<size_t>(j)]);
            const cplx denom = 1.0 - newton * repulsion;
            const cplx w = (denom == cplx(0.0, 0.0)) ? newton : newton / denom;
            zi -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(zi)));
        }
        if (worst < 1e-15)
            break;
    }

    newton_polish(c, z, 4);

    for (const auto& zi : z)
        if (residual_at(c, zi) > kResidualTolerance)
            throw root_finding_error("aberth iteration did not converge for " + p.to_string());
    return z;
}

namespace {

std::vector<bool> flag_real(const std::vector<cplx>& z, double threshold) {
    std::vector<bool> flags(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        flags[i] = std::abs(z[i].imag()) < threshold * (1.0 + std::abs(z[i]));
    return flags;
}

int count_true(const std::vector<bool>& v) {
    int n = 0;
    for (bool b : v)
        n += b ? 1 : 0;
    return n;
}

bool root_order(const cplx& a, const cplx& b) {
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

RootSet classify_real(const IntPoly& p, std::vector<cplx> roots, int expected_real) {
    const auto c = to_double_coeffs(p);
    double threshold = kRealClassifyThreshold;

    auto flags = flag_real(roots, threshold);
    if (count_true(flags) != expected_real) {
        newton_polish(c, roots, 8);
        flags = flag_real(roots, threshold);
    }
    if (count_true(flags) != expected_real) {
        threshold = (count_true(flags) < expected_real) ? threshold * 10.0 : threshold / 10.0;
        flags = flag_real(roots, threshold);
    }
    if (count_true(flags) != expected_real)
        throw root_finding_error("real/complex classification disagrees with Sturm count for " +
                                 p.to_string());

    // Pin real roots to the axis; symmetrize the rest into exact
    // conjugate pairs. Each upper-half root is matched to its nearest
    // conjugate partner (sorting by real part is not robust when
    // distinct pairs share a real part, e.g. purely imaginary roots).
    std::vector<cplx> reals, upper, lower;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (flags[i])
            reals.emplace_back(roots[i].real(), 0.0);
        else if (roots[i].imag() > 0.0)
            upper.push_back(roots[i]);
        else
            lower.push_back(roots[i]);
    }
    if (upper.size() != lower.size())
        throw root_finding_error("conjugate pairing failed for " + p.to_string());
    std::sort(upper.begin(), upper.end(), root_order);
    std::vector<cplx> out = std::move(reals);
    std::vector<bool> used(lower.size(), false);
    for (const cplx& u : upper) {
        size_t partner = lower.size();
        double best = 1e300;
        for (size_t j = 0; j < lower.size(); ++j) {
            if (used[j])
                continue;
            const double dist = std::abs(u - std::conj(lower[j]));
            if (dist < best) {
                best = dist;
                partner = j;
            }
        }
        if (partner == lower.size() || best > 1e-10 * (1.0 + std::abs(u)))
            throw root_finding_error("conjugate pairing failed for " + p.to_string());
        used[partner] = true;
        const cplx m = 0.5 * (u + std::conj(lower[partner]));
        out.push_back(m);
        out.push_back(std::conj(m));
    }
    std::sort(out.begin(), out.end(), root_order);

    RootSet rs;
    rs.source_degree = p.degree();
    rs.roots = std::move(out);
    rs.residuals.resize(rs.roots.size());
    rs.real_flags.resize(rs.roots.size());
    for (size_t i = 0; i < rs.roots.size(); ++i) {
        rs.residuals[i] = residual_at(c, rs.roots[i]);
        rs.real_flags[i] = rs.roots[i].imag() == 0.0;
        if (rs.residuals[i] > kResidualTolerance)
            throw root_finding_error("residual above tolerance after classification for " +
                                     p.to_string());
    }
    return rs;
}

RootSet find_roots(const IntPoly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots needs degree >= 1");
    if (!p.is_squarefree())
        throw std::invalid_argument("find_roots requires a squarefree polynomial");
    auto raw = aberth_roots(p);
    return classify_real(p, std::move(raw), p.sturm_real_count());
}

} // namespace heightbound
