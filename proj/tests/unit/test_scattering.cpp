#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ncqm/radial.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/spectrum.hpp"

using namespace ncqm;

TEST_CASE("S-matrix against mpmath Γ ratios")
{
    struct Row
    {
        unsigned j;
        double alpha, p;
        cplx S;
    };
    Row const rows[] = {
        {0, 1.0, 0.7, {0.92632760933644262186, 0.37671894056581617533}},
        {2, -1.5, 2.3, {0.34587880132527944167, 0.93827919874299029051}},
        {1, 0.4, 5.0, {0.99770825495153654483, -0.067662678054890449138}},
    };
    for (auto const& r : rows)
    {
        auto const v = smatrix_at_momentum(r.j, r.p, r.alpha);
        CHECK(std::abs(v.S - r.S) < 1e-13);
        CHECK(std::abs(std::exp(cplx(0, 2 * v.phase_shift)) - r.S) < 1e-13);
    }
    CHECK(smatrix_at_momentum(3, 0.2, 0.0).S == cplx(1));
    CHECK_THROWS_AS(smatrix_at_momentum(0, cplx(0, 1), 1.0), PoleError);
    CHECK_THROWS_AS(smatrix_qm(0, -1.0, 1.0), PreconditionError);
}

TEST_CASE("conformal momentum and the two edges")
{
    Params const p{0.5, 1.0, 0.0};
    auto const lo = p_of_E(1.0, p), hi = p_of_E(7.0, p);
    CHECK(lo.edge == Edge::Upper);
    CHECK(hi.edge == Edge::Lower);
    CHECK(lo.p.real() == doctest::Approx(hi.p.real()));
    CHECK(p_of_E(4.0, p).p.real() == doctest::Approx(2.0));
    CHECK(p_of_E(-1.0, p).p.imag() > 0);
    CHECK(p_of_E(9.0, p).p.imag() < 0);
    for (double E : {0.5, 3.0, 5.0, 7.9})
        CHECK(E_of_p(p_of_E(E, p), p).real() == doctest::Approx(E).epsilon(1e-12));
    for (cplx E : {cplx(2.0, 1.0), cplx(-1.0, 0.3), cplx(9.0, 2.0)})
    {
        auto const m = p_of_E(E, p);
        CHECK(std::abs(p_of_E(E_of_p(m, p), p).p - m.p) < 1e-13);
    }
}

TEST_CASE("unitarity and the commutative limit")
{
    Params const p{0.1, 2.0, 0.0};
    for (unsigned j = 0; j <= 3; ++j)
        for (double E = 1.0; E < 200; E += 7.3)
            CHECK(std::abs(std::abs(smatrix_nc(j, E, p).S) - 1) < 1e-13);
    // phase difference from ordinary QM shrinks by ~100 per decade of λ
    double const d1 = std::abs(smatrix_nc(0, 0.5, {1e-2, 1.0, 0.0}).phase_shift - smatrix_qm(0, 0.5, 1.0).phase_shift);
    double const d2 = std::abs(smatrix_nc(0, 0.5, {1e-3, 1.0, 0.0}).phase_shift - smatrix_qm(0, 0.5, 1.0).phase_shift);
    CHECK(d1 / d2 == doctest::Approx(100).epsilon(0.05));
}

TEST_CASE("poles sit at the bound-state energies")
{
    for (double alpha : {1.0, -1.0})
    {
        Params const p{0.3, alpha, 0.0};
        auto const poles = pole_energies(1, p, 3);
        auto const levels = bound_energies(p, 1, 3);
        for (int i = 0; i < 3; ++i)
            CHECK(poles[i] == doctest::Approx(levels[i].E).epsilon(1e-12));
    }
    CHECK_THROWS_AS(pole_energies(0, {0.3, 0.0, 0.0}, 1), PreconditionError);
}

TEST_CASE("phase unwrapping removes π jumps only")
{
    std::vector<SMatrixValue> v{{1.0, 1.4}, {1.0, 1.5}, {1.0, 1.6 - std::numbers::pi}, {1.0, 1.7 - std::numbers::pi}};
    auto const sweep = unwrap_phases(v);
    REQUIRE(sweep.flagged.size() == 1);
    CHECK(sweep.flagged[0] == 2);
    CHECK(sweep.values[3].phase_shift == doctest::Approx(1.7));
}

TEST_CASE("connection-formula terms rebuild the radial values")
{
    Params const p{0.5, 1.0, 0.0};
    for (double E : {1.2, 6.8})
        for (unsigned j = 0; j <= 1; ++j)
        {
            auto const closed = radial_closed_form(j, E, p, 30);
            auto const t = asymptotic_decomposition(j, E, p, 30);
            CHECK(std::abs(t.term_in + t.term_out - closed.values[30]) < 1e-10 * std::abs(closed.values[30]));
            CHECK((E < 4 ? t.p > 0 : t.p < 0));
            cplx const S = (j % 2 ? 1.0 : -1.0) * t.coeff_out / t.coeff_in;
            CHECK(std::abs(S - smatrix_at_momentum(j, t.p, p.alpha).S) < 1e-12);
        }
    // λp = 0.5 puts the series on its circle of convergence
    CHECK_THROWS_AS(asymptotic_decomposition(0, 4 - 2 * std::sqrt(3.0), p, 20), ConvergenceError);
    CHECK_THROWS_AS(asymptotic_decomposition(0, -1.0, p, 20), RegimeError);
}

TEST_CASE("Bernoulli prefactor")
{
    Params const p{0.5, 1.0, 0.0};
    double const E = 4 - 2 * std::sqrt(3.0);
    auto const full = prefactor_via_lngamma(1, E, p, 50);
    CHECK(std::abs(full.bernoulli - full.exact) < 1e-12 * std::abs(full.exact));
    CHECK(full.terms > 3);
    auto const stirling = prefactor_via_lngamma(1, E, p, 50, 0);
    CHECK(std::abs(stirling.bernoulli - stirling.exact) > 1e-6 * std::abs(stirling.exact));
}

TEST_CASE("scattering mirror across E = 1/λ²")
{
    auto const m = scattering_mirror_check(1, 0.4, {1.0, 1.0, 0.0}, 30);
    CHECK(m.max_deviation < 1e-12);
    CHECK(m.prefactor_deviation < 1e-15);
    CHECK_THROWS_AS(scattering_mirror_check(0, 2.0, {1.0, 1.0, 0.0}, 5), PreconditionError);
}
