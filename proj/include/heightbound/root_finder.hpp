#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "heightbound/int_poly.hpp"

namespace heightbound {

/// Raised when the iteration fails to converge or the real/complex
/// classification cannot be reconciled with the exact Sturm count.
struct root_finding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All complex roots of one integer polynomial, sorted by (re, im),
/// with residual-based quality control.
///
/// Invariants on a returned RootSet:
///   - roots.size() == source_degree
///   - every residual (a Newton-step relative error estimate) <= 1e-10
///   - the number of real-flagged roots equals the Sturm count
///   - non-real roots come in exactly conjugate pairs (symmetrized)
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;
    std::vector<bool> real_flags;
    int source_degree = 0;

    int real_count() const;
};

/// Residual cap accepted for a polished root (relative).
inline constexpr double kResidualTolerance = 1e-10;

/// Base threshold for |Im| real classification (relative).
inline constexpr double kRealClassifyThreshold = 1e-8;

/// Root inclusion radius 1 + max_{k<d} |c_k| / |c_d|.
double cauchy_bound(const IntPoly& p);

/// Aberth-Ehrlich simultaneous iteration with Newton polishing; raw
/// roots in no particular order, no classification. Throws
/// root_finding_error if some residual stays above kResidualTolerance.
std::vector<std::complex<double>> aberth_roots(const IntPoly& p);

/// Classifies roots as real/complex against the exact expected count
/// (from polyint's Sturm count), escalating once (extra polish, then a
/// one-decade threshold adjustment) before failing. Real roots get their
/// imaginary part zeroed; complex roots are symmetrized into exact
/// conjugate pairs.
RootSet classify_real(const IntPoly& p, std::vector<std::complex<double>> roots, int expected_real);

/// find_roots = aberth_roots + classify_real against sturm_real_count.
/// Requires squarefree p of degree >= 1.
RootSet find_roots(const IntPoly& p);

} // namespace heightbound
