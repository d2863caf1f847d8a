#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ncqm/radial.hpp"

using namespace ncqm;

namespace {

double max_rel(std::vector<cplx> const& a, std::vector<cplx> const& b)
{
    double dev = 0, scale = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        dev = std::max(dev, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return dev / scale;
}

}  // namespace

TEST_CASE("regime classification")
{
    Params const p{0.5, 1.0, 0.0};
    CHECK(classify(-1.0, p).regime == Regime::NegativeE);
    CHECK(classify(0.0, p).regime == Regime::EtaZero);
    CHECK(classify(3.0, p).regime == Regime::LowScattering);
    CHECK(classify(8.0, p).regime == Regime::EtaOne);
    CHECK(classify(9.0, p).regime == Regime::UltraHigh);
    CHECK(classify_exact(Rational(8), Rational(1, 2)) == Regime::EtaOne);
    CHECK(classify_exact(Rational(-1, 100), Rational(1, 2)) == Regime::NegativeE);
}

TEST_CASE("closed forms solve the level recurrence in every regime")
{
    Params const p{0.5, 1.3, 0.0};
    for (double E : {-2.0, -0.3, 0.0, 0.9, 4.0, 7.5, 8.0, 8.7, 15.0})
        for (unsigned j = 0; j <= 2; ++j)
        {
            INFO("E = " << E << ", j = " << j);
            auto const closed = radial_closed_form(j, E, p, 25);
            auto const res = recurrence_residual(closed, E, p);
            for (unsigned n = 0; n + 2 <= 25; ++n)
                CHECK(res[n] < 1e-11);
            CHECK(max_rel(radial_from_recurrence(j, E, p, 25).values, closed.values) < 1e-10);
        }
}

TEST_CASE("plus and minus signs give the same function")
{
    Params const p{1.0, 0.8, 0.0};
    for (double E : {-1.5, 0.4, 1.6, 3.0})
        CHECK(max_rel(radial_closed_form(1, E, p, 30, Branch::Minus).values,
                      radial_closed_form(1, E, p, 30).values)
              < 1e-10);
    for (Rational E : {Rational(-1, 4), Rational(9, 4), Rational(-2, 3)})
        CHECK(radial_closed_form_exact(2, E, 1, Rational(5, 3), 25, Branch::Plus)
              == radial_closed_form_exact(2, E, 1, Rational(5, 3), 25, Branch::Minus));
}

TEST_CASE("exact and float closed forms agree")
{
    Params const p{1.0, 1.5, 0.0};
    auto const ex = radial_closed_form_exact(1, Rational(-1, 4), 1, Rational(3, 2), 20, Branch::Plus);
    auto const fl = radial_closed_form(1, -0.25, p, 20);
    for (unsigned N = 0; N <= 20; ++N)
        CHECK(std::abs(fl.values[N] - ex[N].convert_to<double>()) < 1e-13 * std::abs(fl.values[0]));
    // √(η²(η²-1)) irrational: no exact path
    CHECK_THROWS_AS(radial_closed_form_exact(0, Rational(-1, 3), 1, 1, 5, Branch::Plus), PreconditionError);
}

TEST_CASE("degenerate energies use their own closed forms")
{
    Params const p{0.5, 1.0, 0.0};
    auto const zero = radial_closed_form(0, 0.0, p, 10);
    CHECK(zero.source == RadialSource::EtaZero);
    CHECK(max_rel(zero.values, radial_eta_zero(0, p, 10).values) < 1e-15);
    auto const one = radial_closed_form(0, 8.0, p, 10);
    CHECK(one.source == RadialSource::EtaOne);
    // alternating signs at η = 1 with α > 0
    for (unsigned N = 0; N + 1 <= 10; ++N)
        CHECK(one.values[N].real() * one.values[N + 1].real() < 0);
}

TEST_CASE("commutative radial function against mpmath")
{
    // e^{ikr} φ(2 - i/k, 4, -2ikr) at E = 0.7, r = 2.5
    cplx const v = commutative_radial(1, 0.7, 1.0, 2.5);
    CHECK(v.real() == doctest::Approx(0.024253043821018684003).epsilon(1e-12));
    CHECK(std::abs(v.imag()) < 1e-15);
    CHECK(commutative_bound_radial(1, 0, 1.0, 2.0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("ODE coefficients discriminant vanishes at η = 1")
{
    Params const p{0.5, 1.0, 0.0};
    CHECK(std::abs(ode_coefficients(1, 8.0, p).D_sq) < 1e-12);
    CHECK(std::abs(ode_coefficients(1, 3.0, p).D_sq) > 1e-3);
}
