#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "heightbound/int_poly.hpp"
#include "heightbound/root_finder.hpp"

namespace heightbound {

namespace {

using cplx = std::complex<double>;

// rounding tolerance for reconstructed factor coefficients; candidates
// are confirmed by exact division afterwards
constexpr double kFactorRoundTolerance = 1e-3;

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> divs;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            mpz_class q = a / d;
            if (q != d)
                divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// monic polynomial with the chosen subset of roots, by convolution
std::vector<cplx> monic_from_roots(const std::vector<cplx>& roots, const std::vector<int>& subset) {
    std::vector<cplx> c{cplx(1.0, 0.0)};
    for (int idx : subset) {
        c.insert(c.begin(), cplx(0.0, 0.0));
        for (size_t k = 0; k + 1 < c.size(); ++k)
            c[k] -= roots[static_cast<size_t>(idx)] * c[k + 1];
    }
    return c;
}

bool round_candidate(const std::vector<cplx>& monic, const mpz_class& lead,
                     std::vector<mpz_class>& out) {
    const double b = lead.get_d();
    out.assign(monic.size(), mpz_class(0));
    for (size_t k = 0; k + 1 < monic.size(); ++k) {
        const cplx v = monic[k] * b;
        if (std::abs(v.imag()) > kFactorRoundTolerance)
            return false;
        const double r = std::round(v.real());
        if (std::abs(v.real() - r) > kFactorRoundTolerance)
            return false;
        if (std::abs(r) < 9e18)
            out[k] = static_cast<long>(std::llround(v.real()));
        else
            out[k] = mpz_class(r);
    }
    out.back() = lead;
    return true;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int m = static_cast<int>(idx.size());
    int i = m - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i)
        --i;
    if (i < 0)
        return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
}

} // namespace

bool is_irreducible(const IntPoly& p) {
    const int d = p.degree();
    if (d < 1)
        return false;
    if (d == 1)
        return true;

    const auto roots = aberth_roots(p);
    const auto divisors = positive_divisors(p.leading());

    std::vector<mpz_class> candidate;
    for (int m = 1; m <= d / 2; ++m) {
        std::vector<int> subset(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j)
            subset[static_cast<size_t>(j)] = j;
        do {
            const auto monic = monic_from_roots(roots, subset);
            for (const auto& b : divisors) {
                if (!round_candidate(monic, b, candidate))
                    continue;
                IntPoly g(candidate);
                if (g.degree() == m && divides(p, g))
                    return false;
            }
        } while (next_combination(subset, d));
    }
    return true;
}

} // namespace heightbound
