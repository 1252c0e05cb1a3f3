#include "heightbound/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace heightbound {

std::string fmt17(double v) {
    if (!std::isfinite(v))
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    if (v == 0.0)
        v = 0.0; // collapse -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    // buf: [-]d.dddddddddddddddde[+-]XX...
    std::string s(buf);
    const size_t epos = s.find('e');
    std::string mantissa = s.substr(0, epos);
    const int exp10 = std::atoi(s.c_str() + epos + 1);
    if (exp10 < -4 || exp10 > 16)
        return s;

    bool negative = false;
    if (mantissa[0] == '-') {
        negative = true;
        mantissa.erase(0, 1);
    }
    std::string digits = mantissa.substr(0, 1) + mantissa.substr(2); // 17 digits
    std::string out;
    if (exp10 >= 0) {
        out = digits.substr(0, static_cast<size_t>(exp10) + 1);
        if (exp10 + 1 < 17)
            out += "." + digits.substr(static_cast<size_t>(exp10) + 1);
    } else {
        out = "0." + std::string(static_cast<size_t>(-exp10 - 1), '0') + digits;
    }
    return negative ? "-" + out : out;
}

std::string ratio_string(int num, int den) {
    if (den <= 0)
        throw std::invalid_argument("ratio_string: nonpositive denominator");
    const int g = std::gcd(num, den);
    const int n = num / g;
    const int d = den / g;
    if (d == 1)
        return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char esc[8];
                std::snprintf(esc, sizeof esc, "\\u%04x", ch);
                out += esc;
            } else {
                out.push_back(ch);
            }
        }
    }
    return out;
}

} // namespace heightbound
