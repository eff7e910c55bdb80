#include "etri/rational.hpp"

#include <algorithm>
#include <cctype>

#include "etri/error.hpp"

namespace etri {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt digits_to_int(std::string_view s) {
    BigInt v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw StructuralError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw StructuralError(std::string("bad rational literal: '") + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw StructuralError(std::string("bad rational literal: '") + std::string(text) + "'");
        BigInt d = digits_to_int(den);
        if (d == 0) throw StructuralError(std::string("zero denominator in '") + std::string(text) + "'");
        value = Rational(digits_to_int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw StructuralError(std::string("bad rational literal: '") + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw StructuralError(std::string("bad rational literal: '") + std::string(text) + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = (whole.empty() ? BigInt(0) : digits_to_int(whole)) * scale +
                     (frac.empty() ? BigInt(0) : digits_to_int(frac));
        value = Rational(num, scale);
    } else {
        if (!all_digits(s)) throw StructuralError(std::string("bad rational literal: '") + std::string(text) + "'");
        value = Rational(digits_to_int(s));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();

    // factor the denominator as 2^a * 5^b * rest
    BigInt rest = den;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();

    int digits = std::max(twos, fives);
    BigInt scaled = num;
    for (int i = twos; i < digits; ++i) scaled *= 2;
    for (int i = fives; i < digits; ++i) scaled *= 5;

    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

}  // namespace etri
