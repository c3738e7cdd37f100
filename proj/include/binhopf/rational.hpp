#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "binhopf/error.hpp"

namespace binhopf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    const Integer& den = boost::multiprecision::denominator(r);
    std::string out = boost::multiprecision::numerator(r).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

/// Parses "[-]p" or "[-]p/q" with q > 0.
inline Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    const Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    const Rational r(Integer{std::string(num)}, d);
    return negative ? Rational(-r) : r;
}

inline Integer factorial(std::size_t n)
{
    Integer out = 1;
    for (std::size_t i = 2; i <= n; ++i)
        out *= i;
    return out;
}

inline Integer binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    Integer out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace binhopf
