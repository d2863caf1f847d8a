#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ncqm/error.hpp"

namespace ncqm {

template<class T>
using Complex = std::complex<T>;
using cplx = std::complex<double>;

/// Relative stopping threshold for non-terminating series.
template<class T>
constexpr T series_tolerance();
template<>
constexpr double series_tolerance<double>()
{
    return 1e-16;
}
template<>
constexpr long double series_tolerance<long double>()
{
    return 2e-19L;
}

/// Hard cap on summed terms; exceeding it is a divergence.
inline constexpr std::size_t series_max_terms = 100000;

/// True if a is (numerically exactly) a non-positive integer; stores -a.
template<class T>
bool is_nonpositive_integer(Complex<T> a, long* magnitude = nullptr);

/// Rising factorial a(a+1)...(a+m-1) by direct product.
template<class T>
Complex<T> pochhammer(Complex<T> a, unsigned m);

/// Principal branch of ln Γ(z), continuous off the negative real axis.
template<class T>
Complex<T> log_gamma(Complex<T> z);

/// Gauss ₂F₁(a, b; c; z); polynomial when a or b is a non-positive integer.
template<class T>
Complex<T> gauss_2f1(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> z);

/// Kummer φ(a; c; z) = ₁F₁.
template<class T>
Complex<T> kummer_1f1(Complex<T> a, Complex<T> c, Complex<T> z);

template<class T>
struct AsymptoticSum
{
    Complex<T> value;
    T first_dropped;  //!< |next term|, the usual error estimate
};

/// Partial sum of ψ(a, c; z) ~ Σ (-1)^m (a)_m (a-c+1)_m / m! z^{-a-m}.
template<class T>
AsymptoticSum<T>
tricomi_psi_asymptotic(Complex<T> a, Complex<T> c, Complex<T> z, unsigned terms);

/// Bessel J_ν(z) by its power series.
template<class T>
Complex<T> bessel_j(Complex<T> nu, Complex<T> z);

/// Bernoulli polynomial B_n(a), n <= bernoulli_max_degree.
template<class T>
Complex<T> bernoulli_poly(unsigned n, Complex<T> a);

/// (z+a-1/2)ln z - z + ln(2π)/2 + Σ_{n=1}^{terms} (-1)^{n+1} B_{n+1}(a) z^{-n} / (n(n+1)).
template<class T>
Complex<T> log_gamma_asymptotic(Complex<T> z, Complex<T> a, unsigned terms);

struct LevelSums
{
    std::vector<cplx> values;
    unsigned max_digits = 16;  //!< widest precision any level needed
};

/*!
 * Values ₂F₁(a, -N; c; z) for N = 0 .. count-1.
 *
 * The batched double kernel runs first. Any level whose largest term exceeds
 * the sum by more than 10^3 is re-summed from the same double inputs in
 * 50, 120 or 300 significant digits, whichever keeps 20 digits after
 * cancellation.
 */
LevelSums gauss_2f1_levels(cplx a, cplx c, cplx z, std::size_t count);

/// ₂F₁(a, -n; c; z) summed in the given number of decimal digits (50, 120 or 300).
cplx gauss_2f1_terminating_mp(cplx a, unsigned n, cplx c, cplx z, unsigned digits,
                              double* digits_lost = nullptr);

#define NCQM_SPECIAL_EXTERN(T)                                                 \
    extern template bool is_nonpositive_integer<T>(Complex<T>, long*);         \
    extern template Complex<T> pochhammer<T>(Complex<T>, unsigned);            \
    extern template Complex<T> log_gamma<T>(Complex<T>);                       \
    extern template Complex<T> gauss_2f1<T>(                                   \
        Complex<T>, Complex<T>, Complex<T>, Complex<T>);                       \
    extern template Complex<T> kummer_1f1<T>(Complex<T>, Complex<T>, Complex<T>); \
    extern template AsymptoticSum<T> tricomi_psi_asymptotic<T>(                \
        Complex<T>, Complex<T>, Complex<T>, unsigned);                         \
    extern template Complex<T> bessel_j<T>(Complex<T>, Complex<T>);            \
    extern template Complex<T> bernoulli_poly<T>(unsigned, Complex<T>);        \
    extern template Complex<T> log_gamma_asymptotic<T>(                        \
        Complex<T>, Complex<T>, unsigned);

NCQM_SPECIAL_EXTERN(double)
NCQM_SPECIAL_EXTERN(long double)
#undef NCQM_SPECIAL_EXTERN

}  // namespace ncqm
