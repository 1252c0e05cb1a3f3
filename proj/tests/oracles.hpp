#pragma once

// Test-only oracles, kept independent of the library code paths they
// cross-check:
//  - reducibility by exhaustive enumeration of integer factor candidates
//    (rational long division, no pseudo-remainders, no numeric roots)
//  - a deterministic pseudo-random generator for property tests

#include <cmath>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "heightbound/int_poly.hpp"

namespace oracles {

inline std::vector<mpz_class> divisors_signed(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            mpz_class q = a / d;
            if (q != d) {
                out.push_back(q);
                out.push_back(-q);
            }
        }
    }
    return out;
}

// long division over Q: true iff g | p exactly
inline bool divides_rational(const heightbound::IntPoly& p, const heightbound::IntPoly& g) {
    std::vector<mpq_class> r(p.coeffs().begin(), p.coeffs().end());
    const int gd = g.degree();
    const mpq_class glc(g.leading());
    for (int k = p.degree(); k >= gd; --k) {
        mpq_class q = r[static_cast<size_t>(k)] / glc;
        if (q == 0)
            continue;
        for (int j = 0; j <= gd; ++j)
            r[static_cast<size_t>(k - gd + j)] -= q * mpq_class(g[j]);
    }
    for (int k = 0; k < gd; ++k)
        if (r[static_cast<size_t>(k)] != 0)
            return false;
    return true;
}

// Exhaustive factor search: leading coefficients over divisors of lc(p),
// constants over divisors of p(0), middle coefficients over a
// Mignotte-style box 2^m * ceil(||p||_2). If any factor exists, its
// primitive part is inside these sets, so enumerating them all is
// exhaustive; g(+-1) | p(+-1) is an exact necessary condition used as a
// pre-filter. Degree <= 8 scale only.
inline bool brute_force_reducible(const heightbound::IntPoly& p) {
    const int d = p.degree();
    if (d <= 1)
        return false;
    if (p.constant() == 0)
        return true; // x divides
    double norm2 = 0;
    for (const auto& c : p.coeffs())
        norm2 += c.get_d() * c.get_d();
    const auto leads = divisors_signed(p.leading());
    const auto consts = divisors_signed(p.constant());
    const mpz_class p1 = p.eval(1);
    const mpz_class pm1 = p.eval(-1);

    auto admissible = [&](const std::vector<mpz_class>& g) {
        mpz_class g1 = 0, gm1 = 0;
        int sign = 1;
        for (const auto& c : g) {
            g1 += c;
            gm1 += sign * c;
            sign = -sign;
        }
        if (g1 == 0)
            return p1 == 0;
        if (gm1 == 0)
            return pm1 == 0;
        return p1 % g1 == 0 && pm1 % gm1 == 0;
    };

    for (int m = 1; m <= d / 2; ++m) {
        const long box = static_cast<long>(std::ceil(std::ldexp(std::sqrt(norm2), m)));
        std::vector<mpz_class> cand(static_cast<size_t>(m) + 1);
        for (const auto& lead : leads) {
            if (lead < 0)
                continue; // sign is absorbed by the cofactor
            cand.back() = lead;
            for (const auto& c0 : consts) {
                cand.front() = c0;
                std::vector<long> mid(static_cast<size_t>(m - 1), -box);
                for (;;) {
                    for (size_t j = 0; j < mid.size(); ++j)
                        cand[j + 1] = mid[j];
                    if (admissible(cand)) {
                        heightbound::IntPoly g(cand);
                        if (divides_rational(p, g))
                            return true;
                    }
                    size_t j = 0;
                    while (j < mid.size() && mid[j] == box) {
                        mid[j] = -box;
                        ++j;
                    }
                    if (j == mid.size())
                        break;
                    ++mid[j];
                }
            }
        }
    }
    return false;
}

// xorshift generator for reproducible property tests
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    long int_in(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace oracles
