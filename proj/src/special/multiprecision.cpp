// Wide-precision summation of terminating ₂F₁ polynomials whose terms cancel.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "ncqm/special.hpp"

namespace ncqm {

namespace {

template<unsigned Digits>
cplx sum_terminating(cplx a_in, unsigned n, cplx c_in, cplx z_in, double* digits_lost)
{
    using Real = boost::multiprecision::number<
        boost::multiprecision::cpp_bin_float<Digits>, boost::multiprecision::et_off>;
    using Cx = boost::multiprecision::number<
        boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<Digits>>,
        boost::multiprecision::et_off>;

    // double -> wide conversion is exact
    Cx const a(Real(a_in.real()), Real(a_in.imag()));
    Cx const c(Real(c_in.real()), Real(c_in.imag()));
    Cx const z(Real(z_in.real()), Real(z_in.imag()));

    Cx sum = 1;
    Cx term = 1;
    Real maxterm = 1;
    for (unsigned m = 0; m < n; ++m)
    {
        Cx cm = c + Real(m);
        if (cm == Cx(0))
            throw PoleError("gauss_2f1_terminating_mp: c hits a non-positive integer");
        term *= (a + Real(m)) * Real(static_cast<double>(m) - static_cast<double>(n)) * z
                / (cm * Real(m + 1));
        sum += term;
        Real t = abs(term);
        if (t > maxterm)
            maxterm = t;
    }
    if (digits_lost)
    {
        Real s = abs(sum);
        *digits_lost = s == 0 ? static_cast<double>(Digits)
                              : std::max(0.0, static_cast<double>(log10(maxterm / s)));
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace

cplx gauss_2f1_terminating_mp(cplx a, unsigned n, cplx c, cplx z, unsigned digits,
                              double* digits_lost)
{
    switch (digits)
    {
        case 50:
            return sum_terminating<50>(a, n, c, z, digits_lost);
        case 120:
            return sum_terminating<120>(a, n, c, z, digits_lost);
        case 300:
            return sum_terminating<300>(a, n, c, z, digits_lost);
        default:
            throw PreconditionError("gauss_2f1_terminating_mp: digits must be 50, 120 or 300");
    }
}

}  // namespace ncqm
