#include "ternary/numeric.hpp"

#include <cctype>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

bool is_integer_literal(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ValidationError("malformed rational '" + text + "'");
    Integer n(num.front() == '+' ? num.substr(1) : num);
    Integer d(den);
    if (d == 0)
        throw ValidationError("zero denominator in '" + text + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, x);
    return abs(g);
}

IntVector make_primitive(IntVector v)
{
    const Integer g = gcd_of(v);
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

IntVector primitive_direction(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = boost::multiprecision::lcm(l, denominator(x));
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(numerator(x) * (l / denominator(x)));
    return make_primitive(std::move(out));
}

RatVector to_rational(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += Rational(a[i]) * b[i];
    return s;
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

}  // namespace ternary
