#include "montyhall/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace montyhall {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// GMP reads a leading 0 as an octal prefix, so strip it first.
Integer decimal_integer(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return Integer(0);
    return Integer(std::string(digits.substr(first)));
}

Integer pow10(int exponent) {
    Integer result = 1;
    for (int i = 0; i < exponent; ++i) result *= 10;
    return result;
}

// 10^exponent as a rational, for either sign of exponent.
Rational pow10_rational(int exponent) {
    if (exponent >= 0) return Rational(pow10(exponent));
    return Rational(Integer(1), pow10(-exponent));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
        const Integer d = decimal_integer(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        result = Rational(decimal_integer(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        const std::string digits = std::string(whole) + std::string(frac);
        result = Rational(decimal_integer(digits), pow10(static_cast<int>(frac.size())));
    } else {
        if (!all_digits(body))
            throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        result = Rational(decimal_integer(body));
    }
    return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int significant) {
    if (significant < 1) throw std::invalid_argument("significant digits must be positive");
    if (value == 0) return "0";

    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;

    // Decimal exponent e with 10^e <= magnitude < 10^(e+1).
    const double approx = to_double(magnitude);
    int exponent = (approx > 0 && std::isfinite(approx))
                       ? static_cast<int>(std::floor(std::log10(approx)))
                       : 0;
    while (pow10_rational(exponent) > magnitude) --exponent;
    while (pow10_rational(exponent + 1) <= magnitude) ++exponent;

    const Rational scaled = magnitude * pow10_rational(significant - 1 - exponent);
    Integer digits = numerator(scaled) / denominator(scaled);
    const Rational remainder = scaled - Rational(digits);
    const Rational half(1, 2);
    if (remainder > half || (remainder == half && (digits % 2) == 1)) ++digits;
    if (digits == pow10(significant)) {
        digits /= 10;
        ++exponent;
    }

    std::string mantissa = digits.str();  // exactly `significant` characters
    std::string out = negative ? "-" : "";

    auto trim = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };

    if (exponent < -4 || exponent >= significant) {
        std::string m = trim(mantissa.substr(0, 1) + "." + mantissa.substr(1));
        std::string e = std::to_string(exponent < 0 ? -exponent : exponent);
        if (e.size() < 2) e.insert(0, "0");
        return out + m + "e" + (exponent < 0 ? "-" : "+") + e;
    }
    if (exponent < 0) {
        return out + trim("0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa);
    }
    const auto int_len = static_cast<std::size_t>(exponent + 1);
    return out + trim(mantissa.substr(0, int_len) + "." + mantissa.substr(int_len));
}

std::string to_decimal_string(double value, int significant) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot render a non-finite value");
    return to_decimal_string(Rational(value), significant);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace montyhall
