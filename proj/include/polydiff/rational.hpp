#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polydiff {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Int n = numerator(base), d = denominator(base);
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    Int np = boost::multiprecision::pow(n, k);
    Int dp = boost::multiprecision::pow(d, k);
    if (e < 0) {
        if (n == 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rat(dp, np);
    }
    return Rat(np, dp);
}

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Parses "p", "-p", "p/q" with optional surrounding sign.
inline Rat rat_from_string(std::string_view sv) {
    if (sv.empty()) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    size_t pos = 0;
    if (sv[pos] == '+' || sv[pos] == '-') { neg = sv[pos] == '-'; ++pos; }
    auto slash = sv.find('/', pos);
    Int num, den = 1;
    try {
        if (slash == std::string_view::npos) {
            num = Int(std::string(sv.substr(pos)));
        } else {
            num = Int(std::string(sv.substr(pos, slash - pos)));
            den = Int(std::string(sv.substr(slash + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + std::string(sv));
    }
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(sv));
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

}  // namespace polydiff
