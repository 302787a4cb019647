#include "vrk/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace vrk {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal: '" + text + "'");

    Rational result;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction: '" + text + "'");
        Integer d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        result = Rational(Integer(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal: '" + text + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(Integer(whole) * scale + Integer(frac), scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number: '" + text + "'");
        result = Rational(Integer(s));
    }
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1) return num;
    return num + "/" + denominator(value).str();
}

} // namespace vrk
