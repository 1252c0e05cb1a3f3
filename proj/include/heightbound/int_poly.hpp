#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heightbound {

/// Thrown by parse_poly on malformed or degenerate input.
struct poly_parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order (coeffs[k] multiplies x^k).
///
/// The zero polynomial is not representable: construction rejects it and
/// the leading coefficient is always nonzero. Values are immutable after
/// construction and safe to share between threads.
class IntPoly {
public:
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    const mpz_class& leading() const { return coeffs_.back(); }
    const mpz_class& constant() const { return coeffs_.front(); }

    /// gcd of all coefficients; always positive.
    mpz_class content() const;

    /// content 1 and positive leading coefficient.
    bool is_canonical() const;

    /// Divides out the content and flips the sign so the leading
    /// coefficient is positive. Roots are unchanged. Idempotent.
    IntPoly normalized() const;

    /// Exact evaluation at an integer point.
    mpz_class eval(const mpz_class& n) const;

    IntPoly derivative() const;

    /// x -> -x, normalized.
    IntPoly mirrored() const;

    /// Coefficients reversed then normalized: if alpha is a root of p,
    /// 1/alpha is a root of the result. Requires p(0) != 0.
    IntPoly reversed() const;

    /// True iff gcd(p, p') is constant over the rationals. Computed with
    /// an exact primitive pseudo-remainder sequence; no floating point.
    bool is_squarefree() const;

    /// Exact number of distinct real roots via a Sturm sequence over the
    /// integers. Requires a squarefree polynomial (throws otherwise).
    int sturm_real_count() const;

    std::string to_string() const;  // human form, descending terms
    std::string coeff_list() const; // "c0,c1,...,cd"

    bool operator==(const IntPoly& other) const;
    bool operator!=(const IntPoly& other) const { return !(*this == other); }

    /// Lexicographic order on (degree, ascending coefficients); used for
    /// deterministic tie-breaking in scans.
    static bool lex_less(const IntPoly& a, const IntPoly& b);

private:
    std::vector<mpz_class> coeffs_;
};

/// Parses either an ascending comma-separated coefficient list
/// ("-1,-1,1") or a human form in x ("x^2 - x - 1"). Whitespace is
/// ignored. No normalization is applied.
IntPoly parse_poly(std::string_view text);

/// True iff g divides p over the rationals (exact pseudo-division test).
bool divides(const IntPoly& p, const IntPoly& g);

/// True iff p has no nonconstant integer-polynomial factor of degree
/// less than deg p. p must be primitive and squarefree; intended for
/// degree <= 8. Degree-1 polynomials are irreducible. The test
/// reconstructs candidate factors from subsets of the numeric roots and
/// confirms divisibility exactly, so a "false" verdict is always exact.
bool is_irreducible(const IntPoly& p);

} // namespace heightbound
