#pragma once

#include <complex>

namespace heightbound {

/// Closed-form quantities attached to the weight function
/// f(x) = |x|^(1/2-a) |1-x^2|^a for a parameter a in (0, 1/2):
/// the maxima of f(x)/max(1,|x|) over C and over R and the real
/// attaining points x1 in (0,1) and x2 = 1/x1.
struct LemmaParams {
    double a;
    double m_real;    // (4a)^a (1-2a)^(1/4-a/2) (1+2a)^(-1/4-a/2)
    double m_complex; // 2^a
    double x1;        // sqrt((1-2a)/(1+2a))
    double x2;        // sqrt((1+2a)/(1-2a))
};

/// Independently maximized counterparts of LemmaParams, found by a
/// golden-section refinement of a 10^4-point log grid (no closed forms).
struct MaximaEstimate {
    double m_real;
    double x_real; // attaining abscissa, reported as the representative in (0, 1]
    double m_complex;
    double rho_complex; // attaining radius (the maximum sits on the imaginary axis)
};

/// Exponent pair for the generalized weight |x|^u |1-x^2|^v. Admissible
/// region: u >= 0, v >= 0, u + 2v <= 1 (boundedness at infinity).
struct ExponentPair {
    double u = 0;
    double v = 0;
};

/// Result of the exponent search, with the coarse-grid stage and the
/// admissible-region boundary value kept as diagnostics.
struct ExponentSearch {
    ExponentPair best;
    double value = 0;
    ExponentPair grid_best;
    double grid_value = 0;
    double boundary_value = 0; // best value on the edge u + 2v = 1
};

/// f(x) = |x|^(1/2-a) |1-x^2|^a.
double f_value(std::complex<double> x, double a);

/// g(x) = f(x)/max(1,|x|); symmetric under x -> 1/x. Throws on x = 0.
double g_value(std::complex<double> x, double a);

/// Closed forms; throws outside the open interval (0, 1/2).
LemmaParams lemma_params(double a);

/// Numeric-maximization oracle for the same quantities. The complex
/// maximization is reduced to the radius: |1-x^2| <= 1+|x|^2 with
/// equality on the imaginary axis.
MaximaEstimate numeric_maxima(double a);

/// a(R) = (1/2) (1 + 4^(1/R))^(-1/2); throws unless 0 < R <= 1.
double optimal_a(double ratio);

/// Lower bound for the absolute height of an algebraic number with real
/// conjugate fraction R:
///   B(R) = ((2^(1-1/R) + sqrt(4^(1-1/R) + 4)) / 2)^(R/2).
double garza_bound(double ratio);

/// ((1 + sqrt 5)/2)^(1/2), the totally real case; equals garza_bound(1).
double schinzel_bound();

/// |M_R(a(R))^(-R) * M_C(a(R))^(R-1) - B(R)|, the algebraic
/// simplification checked numerically.
double bound_identity_chain(double ratio);

/// M~_R(u,v)^(-R) * M~_C(u,v)^(R-1) with numerically maximized M~;
/// throws if (u, v) is outside the admissible region.
double generalized_bound(ExponentPair e, double ratio);

/// Maximizes generalized_bound over the admissible region: coordinate
/// grid at step 1e-2, then local refinement down to step 1e-4.
ExponentSearch optimize_exponents(double ratio);

} // namespace heightbound
