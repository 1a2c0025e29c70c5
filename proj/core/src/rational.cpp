#include "bspline/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "bspline/errors.hpp"

namespace bspline {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(std::string_view text)
{
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        malformed(whole);
    BigInt out = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            malformed(whole);
        out = out * 10 + (c - '0');
    }
    return negative ? BigInt(-out) : out;
}

Rational parse_decimal(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    BigInt mantissa = 0;
    long long scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    std::size_t pos = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (seen_point)
                --scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit)
        malformed(whole);

    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E')
            malformed(whole);
        const std::string_view exponent = s.substr(pos + 1);
        long long e = 0;
        const char* first = exponent.data();
        if (!exponent.empty() && exponent.front() == '+')
            ++first;
        auto [end, ec] = std::from_chars(first, exponent.data() + exponent.size(), e);
        if (ec != std::errc() || end != exponent.data() + exponent.size())
            malformed(whole);
        scale += e;
    }
    if (scale > 4096 || scale < -4096)
        throw InvalidArgument("rational literal exponent out of range: '" + std::string(whole) + "'");

    Rational out(mantissa);
    const BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
    if (scale >= 0)
        out *= power;
    else
        out /= power;
    return negative ? Rational(-out) : out;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty())
        malformed(text);

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
        const BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0)
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return parse_decimal(s, text);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

Rational rational_from_double(double value)
{
    if (!std::isfinite(value))
        throw InvalidArgument("cannot represent a non-finite value as a rational");
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        throw InvalidArgument("failed to format double");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

bool is_integer(const Rational& value)
{
    return boost::multiprecision::denominator(value) == 1;
}

BigInt factorial(int n)
{
    if (n < 0)
        throw InvalidArgument("factorial of a negative number");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

} // namespace bspline
