#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "torsupp/errors.hpp"

namespace torsupp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Checked construction; the result is always reduced with denominator > 0.
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw input_error("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

// Accepts "p" or "p/q" with an optional leading '-'. No whitespace, no '+'.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&]() {
        throw input_error("malformed rational '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        pos = 1;
    }
    const auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to)
            fail();
        Int value = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (text[i] < '0' || text[i] > '9')
                fail();
            value = value * 10 + (text[i] - '0');
        }
        return value;
    };
    const std::size_t slash = text.find('/');
    Int num;
    Int den = 1;
    if (slash == std::string_view::npos) {
        num = digits(pos, text.size());
    } else {
        num = digits(pos, slash);
        den = digits(slash + 1, text.size());
        if (den == 0)
            fail();
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

// Lowest terms, "p/q" or "p" when q = 1, '-' prefix for negatives.
inline std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

inline bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

inline Int floor_to_int(const Rational& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    Int q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        --q;
    return q;
}

// Representative of value mod 1 in [0, 1).
inline Rational mod1(const Rational& value) {
    return value - Rational(floor_to_int(value));
}

} // namespace torsupp
