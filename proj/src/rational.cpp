#include "one21/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace one21 {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    // Division canonicalizes (sign on the numerator, gcd reduced).
    return Rational(num) / Rational(den);
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) return false;
    std::size_t begin = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (begin == text.size()) return false;
    for (std::size_t i = begin; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    out = Integer(std::string(text));
    return true;
}

Integer pow10(std::size_t exponent) {
    Integer result(1);
    for (std::size_t i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num, den;
        if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
        return make_rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty() && frac.empty()) return std::nullopt;
        Integer int_part(0);
        if (!head.empty() && !parse_integer(head, int_part)) return std::nullopt;
        Integer frac_part(0);
        if (!frac.empty() && !parse_integer(frac, frac_part)) return std::nullopt;
        if (frac_part < 0) return std::nullopt;
        Integer scale = pow10(frac.size());
        Integer num = int_part * scale + frac_part;
        if (negative) num = -num;
        return make_rational(num, scale);
    }
    Integer num;
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(num);
}

Rational parse_rational(const std::string& text) {
    auto parsed = try_parse_rational(text);
    if (!parsed) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return *parsed;
}

std::string format_rational(const Rational& value) {
    if (denom(value) == 1) return numer(value).str();
    return numer(value).str() + "/" + denom(value).str();
}

std::string format_decimal(const Rational& value, int significant_digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, to_double(value));
    return buffer;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("non-finite value has no rational representation");
    }
    return Rational(value);
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

Rational truncate_below(const Rational& value, const Rational& max_error) {
    if (max_error <= 0) {
        throw std::invalid_argument("truncate_below needs a positive error bound");
    }
    Integer step(1);
    while (Rational(1) / Rational(step) > max_error) step *= 10;
    // floor(value * step) / step
    Integer scaled_num = numer(value) * step;
    Integer q, r;
    divide_qr(scaled_num, denom(value), q, r);
    if (r != 0 && scaled_num < 0) q -= 1;
    return make_rational(q, step);
}

}  // namespace one21
