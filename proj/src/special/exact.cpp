#include "ncqm/exact.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

Rational pochhammer_exact(Rational const& a, unsigned m)
{
    Rational result = 1;
    for (unsigned k = 0; k < m; ++k)
        result *= a + k;
    return result;
}

BigInt binomial_exact(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i)
    {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial_exact(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Rational pow_exact(Rational const& x, long e)
{
    if (e < 0)
    {
        if (x == 0)
            throw PoleError("pow_exact: zero to a negative power");
        return pow_exact(Rational(1) / x, -e);
    }
    Rational result = 1;
    Rational base = x;
    for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1)
    {
        if (k & 1)
            result *= base;
        base *= base;
    }
    return result;
}

Rational gauss_2f1_exact(Rational const& a, unsigned n, Rational const& c, Rational const& z)
{
    Rational sum = 1;
    Rational term = 1;
    for (unsigned m = 0; m < n; ++m)
    {
        if (c + m == 0)
            throw PoleError("gauss_2f1_exact: c is a non-positive integer");
        term *= (a + m) * Rational(static_cast<long>(m) - static_cast<long>(n)) * z
                / ((c + m) * (m + 1));
        if (term == 0)
            break;
        sum += term;
    }
    return sum;
}

Rational kummer_1f1_exact(unsigned n, Rational const& c, Rational const& z)
{
    Rational sum = 1;
    Rational term = 1;
    for (unsigned m = 0; m < n; ++m)
    {
        if (c + m == 0)
            throw PoleError("kummer_1f1_exact: c is a non-positive integer");
        term *= Rational(static_cast<long>(m) - static_cast<long>(n)) * z / ((c + m) * (m + 1));
        sum += term;
    }
    return sum;
}

namespace {
std::optional<BigInt> exact_isqrt(BigInt const& v)
{
    if (v < 0)
        return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v)
        return std::nullopt;
    return r;
}
}  // namespace

std::optional<Rational> exact_sqrt(Rational const& x)
{
    auto num = exact_isqrt(boost::multiprecision::numerator(x));
    auto den = exact_isqrt(boost::multiprecision::denominator(x));
    if (!num || !den)
        return std::nullopt;
    return Rational(*num, *den);
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto fail = [&] { return PreconditionError("not a rational number: '" + s + "'"); };
    if (s.empty())
        throw fail();

    if (auto slash = s.find('/'); slash != std::string::npos)
    {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0)
            throw fail();
        return num / den;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-')
        negative = s[pos++] == '-';

    BigInt digits = 0;
    long scale = 0;
    bool any = false;
    bool dot = false;
    for (; pos < s.size(); ++pos)
    {
        char ch = s[pos];
        if (std::isdigit(static_cast<unsigned char>(ch)))
        {
            digits = digits * 10 + (ch - '0');
            any = true;
            if (dot)
                --scale;
        }
        else if (ch == '.' && !dot)
            dot = true;
        else
            break;
    }
    if (!any)
        throw fail();
    if (pos < s.size())
    {
        if (s[pos] != 'e' && s[pos] != 'E')
            throw fail();
        std::size_t used = 0;
        long exponent = 0;
        try
        {
            exponent = std::stol(s.substr(pos + 1), &used);
        }
        catch (std::exception const&)
        {
            throw fail();
        }
        if (pos + 1 + used != s.size())
            throw fail();
        scale += exponent;
    }
    Rational value = Rational(digits) * pow_exact(Rational(10), scale);
    return negative ? Rational(-value) : value;
}

}  // namespace ncqm
