#include "ncqm/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ncqm/bernoulli.hpp"
#include "ncqm/simd/kernels.hpp"

namespace ncqm {

namespace {

template<class T>
constexpr T half_log_two_pi = T(0.918938533204672741780329736405617639861L);

// Lanczos (g = 607/128, 15 coefficients); relative accuracy ~1e-15 for Re z > 0.
constexpr double lanczos_coeff[] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

Complex<double> lanczos_log_gamma(Complex<double> z)
{
    Complex<double> tmp = z + 5.24218750000000000;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex<double> ser = 0.999999999999997092;
    Complex<double> y = z;
    for (double c : lanczos_coeff)
    {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / z);
}

// Stirling series with B_2k/(2k(2k-1)); used for long double after shifting Re z >= 20.
constexpr long double stirling_coeff[] = {
    1.0L / 12,          -1.0L / 360,           1.0L / 1260,
    -1.0L / 1680,       1.0L / 1188,           -691.0L / 360360,
    1.0L / 156,         -3617.0L / 122400,     43867.0L / 244188,
    -174611.0L / 125400};

Complex<long double> stirling_log_gamma(Complex<long double> z)
{
    Complex<long double> inv = 1.0L / z;
    Complex<long double> inv2 = inv * inv;
    Complex<long double> corr = 0;
    Complex<long double> power = inv;
    for (long double c : stirling_coeff)
    {
        corr += c * power;
        power *= inv2;
    }
    return (z - 0.5L) * std::log(z) - z + half_log_two_pi<long double> + corr;
}

template<class T>
bool is_finite(Complex<T> z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template<class T>
void require_finite(Complex<T> z, char const* where)
{
    if (!is_finite(z))
        throw PreconditionError(std::string(where) + ": non-finite argument");
}

}  // namespace

template<class T>
bool is_nonpositive_integer(Complex<T> a, long* magnitude)
{
    if (a.imag() != 0 || a.real() > 0 || std::floor(a.real()) != a.real())
        return false;
    if (magnitude)
        *magnitude = static_cast<long>(-a.real());
    return true;
}

template<class T>
Complex<T> pochhammer(Complex<T> a, unsigned m)
{
    Complex<T> result = 1;
    for (unsigned k = 0; k < m; ++k)
        result *= a + T(k);
    return result;
}

template<class T>
Complex<T> log_gamma(Complex<T> z)
{
    require_finite(z, "log_gamma");
    if (is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at non-positive integer");

    T const threshold = std::is_same_v<T, double> ? T(1) : T(20);
    Complex<T> shift_sum = 0;
    while (z.real() < threshold)
    {
        shift_sum += std::log(z);
        z += T(1);
    }
    Complex<T> core;
    if constexpr (std::is_same_v<T, double>)
        core = lanczos_log_gamma(z);
    else
        core = stirling_log_gamma(z);
    return core - shift_sum;
}

template<class T>
Complex<T> gauss_2f1(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> z)
{
    require_finite(a, "gauss_2f1");
    require_finite(b, "gauss_2f1");
    require_finite(c, "gauss_2f1");
    require_finite(z, "gauss_2f1");

    long na = 0, nb = 0;
    bool const term_a = is_nonpositive_integer(a, &na);
    bool const term_b = is_nonpositive_integer(b, &nb);
    if (term_a || term_b)
    {
        long degree = term_a && term_b ? std::min(na, nb) : (term_a ? na : nb);
        Complex<T> sum = 1;
        Complex<T> term = 1;
        for (long m = 0; m < degree; ++m)
        {
            Complex<T> cm = c + T(m);
            if (cm == Complex<T>(0))
                throw PoleError("gauss_2f1: c hits a non-positive integer before termination");
            term *= (a + T(m)) * (b + T(m)) / (cm * T(m + 1)) * z;
            sum += term;
        }
        return sum;
    }

    if (is_nonpositive_integer(c))
        throw PoleError("gauss_2f1: c is a non-positive integer");
    if (std::abs(z) >= T(1))
        throw DivergenceError("gauss_2f1: |z| >= 1 without termination");

    T const eps = series_tolerance<T>();
    Complex<T> sum = 1;
    Complex<T> term = 1;
    for (std::size_t m = 0; m < series_max_terms; ++m)
    {
        Complex<T> ratio = (a + T(m)) * (b + T(m)) / ((c + T(m)) * T(m + 1)) * z;
        term *= ratio;
        sum += term;
        if (std::abs(term) <= eps * std::abs(sum) && std::abs(ratio) < T(1))
            return sum;
        if (term == Complex<T>(0))
            return sum;
    }
    throw DivergenceError("gauss_2f1: iteration cap reached");
}

template<class T>
Complex<T> kummer_1f1(Complex<T> a, Complex<T> c, Complex<T> z)
{
    require_finite(a, "kummer_1f1");
    require_finite(c, "kummer_1f1");
    require_finite(z, "kummer_1f1");

    long na = 0;
    if (is_nonpositive_integer(a, &na))
    {
        Complex<T> sum = 1;
        Complex<T> term = 1;
        for (long m = 0; m < na; ++m)
        {
            Complex<T> cm = c + T(m);
            if (cm == Complex<T>(0))
                throw PoleError("kummer_1f1: c hits a non-positive integer before termination");
            term *= (a + T(m)) / (cm * T(m + 1)) * z;
            sum += term;
        }
        return sum;
    }
    if (is_nonpositive_integer(c))
        throw PoleError("kummer_1f1: c is a non-positive integer");

    T const eps = series_tolerance<T>();
    Complex<T> sum = 1;
    Complex<T> term = 1;
    for (std::size_t m = 0; m < series_max_terms; ++m)
    {
        Complex<T> ratio = (a + T(m)) / ((c + T(m)) * T(m + 1)) * z;
        term *= ratio;
        sum += term;
        if (std::abs(term) <= eps * std::abs(sum) && std::abs(ratio) < T(1))
            return sum;
        if (term == Complex<T>(0))
            return sum;
    }
    throw DivergenceError("kummer_1f1: iteration cap reached");
}

template<class T>
AsymptoticSum<T>
tricomi_psi_asymptotic(Complex<T> a, Complex<T> c, Complex<T> z, unsigned terms)
{
    if (terms == 0)
        throw PreconditionError("tricomi_psi_asymptotic: terms must be >= 1");
    Complex<T> term = std::exp(-a * std::log(z));
    Complex<T> sum = 0;
    for (unsigned m = 0; m < terms; ++m)
    {
        sum += term;
        term *= -(a + T(m)) * (a - c + T(m + 1)) / (T(m + 1) * z);
    }
    return {sum, std::abs(term)};
}

template<class T>
Complex<T> bessel_j(Complex<T> nu, Complex<T> z)
{
    require_finite(nu, "bessel_j");
    require_finite(z, "bessel_j");

    // 1/Γ(m+ν+1) vanishes while m+ν+1 is a non-positive integer, so the series
    // starts at the first m where it does not.
    long m0 = 0;
    long neg = 0;
    if (is_nonpositive_integer(nu + T(1), &neg))
        m0 = neg + 1;

    Complex<T> const half = z / T(2);
    Complex<T> const power = nu + T(2 * m0);
    Complex<T> lead;
    if (half == Complex<T>(0))
    {
        if (power == Complex<T>(0))
            lead = 1;
        else if (power.real() > 0)
            return 0;
        else
            throw PoleError("bessel_j: z = 0 with Re(nu) < 0");
    }
    else
    {
        lead = std::exp(power * std::log(half));
    }

    T sign = (m0 % 2) ? T(-1) : T(1);
    Complex<T> term = sign * lead
                      * std::exp(-log_gamma(Complex<T>(T(m0 + 1)))
                                 - log_gamma(Complex<T>(T(m0)) + nu + T(1)));
    Complex<T> const q = -half * half;
    T const eps = series_tolerance<T>();
    Complex<T> sum = term;
    for (std::size_t k = 0; k < series_max_terms; ++k)
    {
        long m = m0 + static_cast<long>(k);
        Complex<T> ratio = q / (T(m + 1) * (T(m + 1) + nu));
        term *= ratio;
        sum += term;
        if ((std::abs(term) <= eps * std::abs(sum) && std::abs(ratio) < T(1))
            || term == Complex<T>(0))
            return sum;
    }
    throw DivergenceError("bessel_j: iteration cap reached");
}

template<class T>
Complex<T> bernoulli_poly(unsigned n, Complex<T> a)
{
    return BernoulliTable::instance().evaluate(n, a);
}

template<class T>
Complex<T> log_gamma_asymptotic(Complex<T> z, Complex<T> a, unsigned terms)
{
    auto const& table = BernoulliTable::instance();
    if (terms + 1 > table.max_degree())
        throw RangeError("log_gamma_asymptotic: " + std::to_string(terms)
                         + " terms exceed the Bernoulli table");
    Complex<T> const logz = std::log(z);
    Complex<T> result = (z + a - T(0.5)) * logz - z + half_log_two_pi<T>;
    Complex<T> const inv = T(1) / z;
    Complex<T> power = inv;
    for (unsigned n = 1; n <= terms; ++n)
    {
        T sign = (n % 2) ? T(1) : T(-1);
        result += sign * table.evaluate(n + 1, a) * power / T(n * (n + 1));
        power *= inv;
    }
    return result;
}

LevelSums gauss_2f1_levels(cplx a, cplx c, cplx z, std::size_t count)
{
    LevelSums result;
    result.values.resize(count);
    if (count == 0)
        return result;
    long nc = 0;
    if (is_nonpositive_integer(c, &nc) && static_cast<std::size_t>(nc) < count - 1)
        throw PoleError("gauss_2f1_levels: c is a non-positive integer");

    std::vector<double> maxterm(count);
    simd::active().hyp2f1_levels(a, c, z, count, result.values.data(), maxterm.data());

    constexpr double guard_ratio = 1e3;
    constexpr unsigned ladder[] = {50, 120, 300};
    unsigned tier = 0;
    for (std::size_t n = 0; n < count; ++n)
    {
        if (maxterm[n] <= guard_ratio * std::abs(result.values[n]))
            continue;
        // Cancellation only grows with N, so keep the tier once raised.
        for (;;)
        {
            double lost = 0;
            cplx v = gauss_2f1_terminating_mp(a, static_cast<unsigned>(n), c, z, ladder[tier], &lost);
            if (lost + 20 <= ladder[tier])
            {
                result.values[n] = v;
                result.max_digits = std::max(result.max_digits, ladder[tier]);
                break;
            }
            if (++tier == std::size(ladder))
                throw RangeError("gauss_2f1_levels: cancellation exceeds 280 digits at N = "
                                 + std::to_string(n));
        }
    }
    return result;
}

#define NCQM_SPECIAL_INSTANTIATE(T)                                            \
    template bool is_nonpositive_integer<T>(Complex<T>, long*);                \
    template Complex<T> pochhammer<T>(Complex<T>, unsigned);                   \
    template Complex<T> log_gamma<T>(Complex<T>);                              \
    template Complex<T> gauss_2f1<T>(Complex<T>, Complex<T>, Complex<T>, Complex<T>); \
    template Complex<T> kummer_1f1<T>(Complex<T>, Complex<T>, Complex<T>);     \
    template AsymptoticSum<T> tricomi_psi_asymptotic<T>(                       \
        Complex<T>, Complex<T>, Complex<T>, unsigned);                         \
    template Complex<T> bessel_j<T>(Complex<T>, Complex<T>);                   \
    template Complex<T> bernoulli_poly<T>(unsigned, Complex<T>);               \
    template Complex<T> log_gamma_asymptotic<T>(Complex<T>, Complex<T>, unsigned);

NCQM_SPECIAL_INSTANTIATE(double)
NCQM_SPECIAL_INSTANTIATE(long double)

}  // namespace ncqm
