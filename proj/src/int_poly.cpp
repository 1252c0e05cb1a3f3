#include "heightbound/int_poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace heightbound {

namespace {

void trim_high_zeros(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

mpz_class content_of(const std::vector<mpz_class>& c) {
    mpz_class g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void divide_by_content(std::vector<mpz_class>& c) {
    mpz_class g = content_of(c);
    if (g > 1)
        for (auto& x : c)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/* Pseudo-remainder of f by g, sign-corrected so that the result is a
 * positive rational multiple of (f mod g). Exact integer arithmetic:
 * each reduction step replaces f by lc(g)*f - lc(f)*x^delta*g. */
std::vector<mpz_class> prem_positive(std::vector<mpz_class> f, const std::vector<mpz_class>& g) {
    const mpz_class& glc = g.back();
    const int gdeg = static_cast<int>(g.size()) - 1;
    int steps = 0;
    while (static_cast<int>(f.size()) - 1 >= gdeg && !f.empty()) {
        const int shift = static_cast<int>(f.size()) - 1 - gdeg;
        mpz_class flc = f.back();
        for (auto& x : f)
            x *= glc;
        for (size_t k = 0; k < g.size(); ++k)
            f[k + static_cast<size_t>(shift)] -= flc * g[k];
        trim_high_zeros(f);
        ++steps;
    }
    if (glc < 0 && (steps & 1))
        for (auto& x : f)
            x = -x;
    return f;
}

/* Signed-remainder chain for Sturm counting: s0 = p, s1 = p', and
 * s_{k+1} = primitive part of -(s_{k-1} mod s_k). Each element is a
 * positive scalar multiple of the rational Sturm chain element, so sign
 * variation counts are unaffected. Terminates at the (constant) gcd. */
std::vector<std::vector<mpz_class>> sturm_chain(const IntPoly& p) {
    std::vector<std::vector<mpz_class>> chain;
    chain.push_back(p.coeffs());
    divide_by_content(chain.back());
    IntPoly d = p.derivative();
    if (d.degree() < 0)
        return chain;
    chain.push_back(d.coeffs());
    divide_by_content(chain.back());
    while (chain.back().size() > 1) {
        auto r = prem_positive(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break; // nonconstant gcd: p not squarefree
        for (auto& x : r)
            x = -x;
        divide_by_content(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim_high_zeros(coeffs_);
    if (coeffs_.empty())
        throw std::invalid_argument("zero polynomial");
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
    : IntPoly(std::vector<mpz_class>(coeffs.begin(), coeffs.end())) {}

mpz_class IntPoly::content() const {
    return content_of(coeffs_);
}

bool IntPoly::is_canonical() const {
    return leading() > 0 && content() == 1;
}

IntPoly IntPoly::normalized() const {
    std::vector<mpz_class> c = coeffs_;
    divide_by_content(c);
    if (c.back() < 0)
        for (auto& x : c)
            x = -x;
    return IntPoly(std::move(c));
}

mpz_class IntPoly::eval(const mpz_class& n) const {
    mpz_class acc = coeffs_.back();
    for (size_t k = coeffs_.size() - 1; k-- > 0;)
        acc = acc * n + coeffs_[k];
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1)
        throw std::domain_error("derivative of a constant");
    std::vector<mpz_class> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        c[k - 1] = coeffs_[k] * static_cast<long>(k);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::mirrored() const {
    std::vector<mpz_class> c = coeffs_;
    for (size_t k = 1; k < c.size(); k += 2)
        c[k] = -c[k];
    return IntPoly(std::move(c)).normalized();
}

IntPoly IntPoly::reversed() const {
    if (constant() == 0)
        throw std::domain_error("reverse: constant term is zero (alpha = 0 has no inverse)");
    std::vector<mpz_class> c(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(c)).normalized();
}

bool IntPoly::is_squarefree() const {
    if (degree() < 1)
        throw std::domain_error("squarefreeness undefined for constants");
    if (degree() == 1)
        return true;
    auto chain = sturm_chain(*this);
    return chain.back().size() == 1; // gcd(p, p') is a nonzero constant
}

int IntPoly::sturm_real_count() const {
    if (degree() < 1)
        throw std::domain_error("real-root count undefined for constants");
    auto chain = sturm_chain(*this);
    if (chain.back().size() != 1)
        throw std::domain_error("sturm_real_count: polynomial is not squarefree");
    std::vector<int> at_minus_inf, at_plus_inf;
    at_minus_inf.reserve(chain.size());
    at_plus_inf.reserve(chain.size());
    for (const auto& s : chain) {
        const int lead = sgn(s.back());
        const int deg = static_cast<int>(s.size()) - 1;
        at_plus_inf.push_back(lead);
        at_minus_inf.push_back((deg & 1) ? -lead : lead);
    }
    return sign_variations(at_minus_inf) - sign_variations(at_plus_inf);
}

bool IntPoly::operator==(const IntPoly& other) const {
    if (coeffs_.size() != other.coeffs_.size())
        return false;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (cmp(coeffs_[k], other.coeffs_[k]) != 0)
            return false;
    return true;
}

bool IntPoly::lex_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (size_t k = 0; k < a.coeffs_.size(); ++k) {
        const int c = cmp(a.coeffs_[k], b.coeffs_[k]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0)
            os << a.get_str();
        if (k >= 1) {
            os << "x";
            if (k >= 2)
                os << "^" << k;
        }
    }
    return os.str();
}

std::string IntPoly::coeff_list() const {
    std::ostringstream os;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k)
            os << ",";
        os << coeffs_[k].get_str();
    }
    return os.str();
}

bool divides(const IntPoly& p, const IntPoly& g) {
    if (g.degree() > p.degree())
        return false;
    return prem_positive(p.coeffs(), g.coeffs()).empty();
}

namespace {

bool is_integer_token(std::string_view t) {
    if (t.empty())
        return false;
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size())
        return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            return false;
    return true;
}

IntPoly parse_coeff_list(std::string_view text) {
    std::vector<mpz_class> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (!is_integer_token(tok))
            throw poly_parse_error("invalid coefficient '" + std::string(tok) + "'");
        coeffs.emplace_back(std::string(tok), 10);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    trim_high_zeros(coeffs);
    if (coeffs.empty())
        throw poly_parse_error("zero polynomial");
    return IntPoly(std::move(coeffs));
}

constexpr unsigned kMaxExponent = 512;

IntPoly parse_human(const std::string& s) {
    // s has no whitespace; terms are [sign][k][*][x[^e]]
    std::map<unsigned, mpz_class> terms;
    size_t i = 0;
    if (s.empty())
        throw poly_parse_error("empty polynomial");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            if (i == s.size())
                throw poly_parse_error("dangling sign");
        }
        size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        mpz_class coeff = 1;
        bool have_digits = i > dstart;
        if (have_digits)
            coeff = mpz_class(s.substr(dstart, i - dstart), 10);
        if (i < s.size() && s[i] == '*') {
            if (!have_digits)
                throw poly_parse_error("unexpected '*'");
            ++i;
            if (i == s.size() || s[i] != 'x')
                throw poly_parse_error("expected x after '*'");
        }
        unsigned exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t estart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i == estart)
                    throw poly_parse_error("missing exponent");
                unsigned long e = std::stoul(s.substr(estart, i - estart));
                if (e > kMaxExponent)
                    throw poly_parse_error("exponent too large");
                exp = static_cast<unsigned>(e);
            }
        } else if (!have_digits) {
            throw poly_parse_error("unexpected character '" + s.substr(i, 1) + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw poly_parse_error("unexpected character '" + s.substr(i, 1) + "'");
        terms[exp] += sign * coeff;
    }
    unsigned maxexp = terms.rbegin()->first;
    std::vector<mpz_class> coeffs(maxexp + 1, mpz_class(0));
    for (const auto& [e, c] : terms)
        coeffs[e] = c;
    trim_high_zeros(coeffs);
    if (coeffs.empty())
        throw poly_parse_error("zero polynomial");
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw poly_parse_error("empty polynomial");
    if (s.find(',') != std::string::npos)
        return parse_coeff_list(s);
    if (s.find('x') == std::string::npos)
        return parse_coeff_list(s); // bare integer: constant polynomial
    return parse_human(s);
}

} // namespace heightbound
