#pragma once

#include <optional>
#include <string>
#include <utility>

#include "heightbound/int_poly.hpp"
#include "heightbound/root_finder.hpp"

namespace heightbound {

/// Everything the height computation knows about one polynomial:
/// degree d, real-conjugate count r, the exact ratio R = r/d, Mahler
/// measure, absolute height, and (when r > 0) the lower bound B(R) with
/// the achieved margin height - bound.
struct HeightProfile {
    IntPoly poly;
    int d = 0;
    int r = 0;
    double mahler = 0;
    double height = 0;
    std::optional<double> bound;
    std::optional<double> margin;

    int ratio_num() const; // reduced numerator of r/d
    int ratio_den() const; // reduced denominator of r/d
    double ratio() const { return static_cast<double>(r) / d; }
};

/// Two evaluations of the same quantity: one through the numeric roots,
/// one through exact integer evaluations of the polynomial.
struct ProductPair {
    double numeric_side = 0;
    double exact_side = 0;

    double rel_gap() const;
};

/// |lc| * prod max(1, |root|).
double mahler_measure(const IntPoly& p, const RootSet& roots);

/// mahler^(1/d). Requires canonical squarefree p of degree >= 1.
double absolute_height(const IntPoly& p);

/// Full profile; bound/margin populated when r > 0.
HeightProfile height_profile(const IntPoly& p);
HeightProfile height_profile(const IntPoly& p, const RootSet& roots);

/// prod f(root_i) against |p(0)|^(1/2-a) |p(1)p(-1)|^a. Monic p with
/// p(0) p(1) p(-1) != 0 and a in (0, 1/2). The exact side is >= 1.
ProductPair integer_case_product(const IntPoly& p, double a);
ProductPair integer_case_product(const IntPoly& p, const RootSet& roots, double a);

/// (prod |root - 1/root|)^(1/d) against |p(1)p(-1)/(lc * p(0))|^(1/d):
/// the archimedean part of the product formula for alpha - 1/alpha.
ProductPair archimedean_norm_product(const IntPoly& p);
ProductPair archimedean_norm_product(const IntPoly& p, const RootSet& roots);

/// Slack of M_R^R * M_C^(1-R) * H(alpha)^(1/2) * H(1/alpha)^(1/2) >= 1
/// at a = optimal_a(R). Requires r > 0 and p(0) p(1) p(-1) != 0.
double final_inequality_check(const IntPoly& p);
double final_inequality_check(const IntPoly& p, const RootSet& roots, const RootSet& reversed_roots);

/// (H(alpha), H(1/alpha)); equal within 1e-9 relative by the height's
/// reciprocal invariance. Requires p(0) != 0.
std::pair<double, double> reversal_height_symmetry(const IntPoly& p);

/// Flat JSON object, fixed key order: poly, d, r, R_num, R_den, mahler,
/// height, bound, margin (bound/margin omitted when r = 0); floats with
/// 17 significant digits.
std::string to_json(const HeightProfile& profile);

} // namespace heightbound
