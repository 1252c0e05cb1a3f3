#include "heightbound/heights.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "heightbound/bounds.hpp"
#include "heightbound/format.hpp"

namespace heightbound {

namespace {

void require_canonical(const IntPoly& p) {
    if (!p.is_canonical())
        throw std::invalid_argument("polynomial must be canonical (primitive, positive leading)");
}

void require_nonvanishing(const IntPoly& p) {
    if (p.constant() == 0 || p.eval(1) == 0 || p.eval(-1) == 0)
        throw std::domain_error("p(0) p(1) p(-1) = 0: alpha in {0, 1, -1}");
}

} // namespace

int HeightProfile::ratio_num() const {
    return r / std::gcd(r == 0 ? d : r, d);
}

int HeightProfile::ratio_den() const {
    return d / std::gcd(r == 0 ? d : r, d);
}

double ProductPair::rel_gap() const {
    const double scale = std::max(std::fabs(exact_side), 1e-300);
    return std::fabs(numeric_side - exact_side) / scale;
}

double mahler_measure(const IntPoly& p, const RootSet& roots) {
    double m = std::fabs(p.leading().get_d());
    for (const auto& z : roots.roots)
        m *= std::max(1.0, std::abs(z));
    return m;
}

double absolute_height(const IntPoly& p) {
    require_canonical(p);
    const RootSet rs = find_roots(p);
    return std::pow(mahler_measure(p, rs), 1.0 / p.degree());
}

HeightProfile height_profile(const IntPoly& p) {
    require_canonical(p);
    return height_profile(p, find_roots(p));
}

HeightProfile height_profile(const IntPoly& p, const RootSet& roots) {
    require_canonical(p);
    HeightProfile hp{p, p.degree(), roots.real_count(), 0, 0, {}, {}};
    hp.mahler = mahler_measure(p, roots);
    hp.height = std::pow(hp.mahler, 1.0 / hp.d);
    if (hp.r > 0) {
        hp.bound = garza_bound(hp.ratio());
        hp.margin = hp.height - *hp.bound;
    }
    return hp;
}

ProductPair integer_case_product(const IntPoly& p, double a) {
    return integer_case_product(p, find_roots(p), a);
}

ProductPair integer_case_product(const IntPoly& p, const RootSet& roots, double a) {
    if (p.leading() != 1)
        throw std::domain_error("integer-case product requires a monic polynomial");
    require_nonvanishing(p);
    if (!(a > 0.0 && a < 0.5))
        throw std::domain_error("parameter a must lie strictly in (0, 1/2)");
    ProductPair pp;
    pp.numeric_side = 1.0;
    for (const auto& z : roots.roots)
        pp.numeric_side *= f_value(z, a);
    const double p0 = std::fabs(p.constant().get_d());
    const double p1m1 = std::fabs(mpz_class(p.eval(1) * p.eval(-1)).get_d());
    pp.exact_side = std::pow(p0, 0.5 - a) * std::pow(p1m1, a);
    return pp;
}

ProductPair archimedean_norm_product(const IntPoly& p) {
    return archimedean_norm_product(p, find_roots(p));
}

ProductPair archimedean_norm_product(const IntPoly& p, const RootSet& roots) {
    require_nonvanishing(p);
    const int d = p.degree();
    ProductPair pp;
    double prod = 1.0;
    for (const auto& z : roots.roots)
        prod *= std::abs(z - 1.0 / z);
    pp.numeric_side = std::pow(prod, 1.0 / d);
    // prod (alpha_i - 1/alpha_i) = +- p(1) p(-1) / (lc * p(0))
    mpq_class ratio(p.eval(1) * p.eval(-1), p.leading() * p.constant());
    ratio.canonicalize();
    pp.exact_side = std::pow(std::fabs(ratio.get_d()), 1.0 / d);
    return pp;
}

double final_inequality_check(const IntPoly& p) {
    const RootSet rs = find_roots(p);
    return final_inequality_check(p, rs, find_roots(p.reversed()));
}

double final_inequality_check(const IntPoly& p, const RootSet& roots,
                              const RootSet& reversed_roots) {
    require_canonical(p);
    require_nonvanishing(p);
    const int r = roots.real_count();
    if (r == 0)
        throw std::domain_error("r = 0: theorem hypothesis fails");
    const int d = p.degree();
    const double height = std::pow(mahler_measure(p, roots), 1.0 / d);
    const double height_inv = std::pow(mahler_measure(p.reversed(), reversed_roots), 1.0 / d);
    const double ratio = static_cast<double>(r) / d;
    const LemmaParams lp = lemma_params(optimal_a(ratio));
    return std::pow(lp.m_real, ratio) * std::pow(lp.m_complex, 1.0 - ratio) *
               std::sqrt(height) * std::sqrt(height_inv) -
           1.0;
}

std::pair<double, double> reversal_height_symmetry(const IntPoly& p) {
    if (p.constant() == 0)
        throw std::domain_error("reversal symmetry requires p(0) != 0");
    const IntPoly q = p.normalized();
    return {absolute_height(q), absolute_height(q.reversed())};
}

std::string to_json(const HeightProfile& profile) {
    std::ostringstream os;
    os << "{\"poly\":[";
    for (size_t k = 0; k < profile.poly.coeffs().size(); ++k) {
        if (k)
            os << ",";
        os << profile.poly.coeffs()[k].get_str();
    }
    os << "],\"d\":" << profile.d << ",\"r\":" << profile.r
       << ",\"R_num\":" << profile.ratio_num() << ",\"R_den\":" << profile.ratio_den()
       << ",\"mahler\":" << fmt17(profile.mahler) << ",\"height\":" << fmt17(profile.height);
    if (profile.bound)
        os << ",\"bound\":" << fmt17(*profile.bound) << ",\"margin\":" << fmt17(*profile.margin);
    os << "}";
    return os.str();
}

} // namespace heightbound
