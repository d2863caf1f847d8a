#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ncqm/radial.hpp"
#include "ncqm/spectrum.hpp"

using namespace ncqm;

namespace {

std::filesystem::path write_temp(char const* name, char const* text)
{
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("energies against mpmath at λ = 0.2")
{
    // -(1/n²)/(1 + √(1 + λ²/n²)) and its mirror (1 + √…)/λ²
    double const want_I[] = {-0.49509756796392415014, -0.12468905280222567555, -0.055493963954847118132};
    double const want_II[] = {50.49509756796392415, 50.124689052802225676, 50.055493963954847118};
    auto const one = bound_energies_I({0.2, 1.0, 0.0}, 0, 3);
    auto const two = bound_energies_II({0.2, -1.0, 0.0}, 0, 3);
    for (int i = 0; i < 3; ++i)
    {
        CHECK(one[i].E == doctest::Approx(want_I[i]).epsilon(1e-14));
        CHECK(two[i].E == doctest::Approx(want_II[i]).epsilon(1e-14));
        CHECK(one[i].branch == BoundBranch::I);
        CHECK(two[i].n == unsigned(i + 1));
    }
    CHECK_THROWS_AS(bound_energies({0.2, 0.0, 0.0}, 0, 1), PreconditionError);
    CHECK(bound_energies({0.2, -1.0, 0.0}, 1, 2).front().branch == BoundBranch::II);
}

TEST_CASE("termination roots reproduce the closed forms")
{
    for (double alpha : {1.0, -1.0, 0.3})
        for (unsigned j = 0; j <= 2; ++j)
        {
            Params const p{0.6, alpha, 0.0};
            auto const roots = termination_roots(j, p, 4);
            auto const closed = bound_energies(p, j, 4);
            REQUIRE(roots.size() == closed.size());
            for (std::size_t i = 0; i < roots.size(); ++i)
                CHECK(roots[i].E == doctest::Approx(closed[i].E).epsilon(1e-12));
        }
}

TEST_CASE("small-λ expansion")
{
    CHECK(bohr_energy(2, 1.0) == doctest::Approx(-0.125));
    CHECK(bohr_lambda2_coefficient(1, 2.0) == doctest::Approx(2.0));
    double const lam = 1e-3;
    double const E = bound_energies_I({lam, 1.0, 0.0}, 0, 1)[0].E;
    CHECK((E - bohr_energy(1, 1.0)) / (lam * lam) == doctest::Approx(0.125).epsilon(1e-5));
}

TEST_CASE("bound states with a Pythagorean κ are rational")
{
    // κ = 3/4: Ω = 1/2, so R^I_{n=2,j=0}(N) = 2^{-N} (1 - 3N/2)
    auto const r = bound_wavefunction_exact(BoundBranch::I, 2, 0, Rational(3, 4), 12);
    for (unsigned N = 0; N <= 12; ++N)
        CHECK(r[N] == pow_exact(Rational(1, 2), N) * (1 - Rational(3 * N, 2)));
    auto const ground = bound_wavefunction_exact(BoundBranch::I, 1, 0, Rational(3, 4), 5);
    CHECK(ground[5] == Rational(1, 32));
    CHECK_THROWS_AS(bound_wavefunction_exact(BoundBranch::I, 1, 0, Rational(1, 2), 5), PreconditionError);
}

TEST_CASE("mirror symmetry between branches")
{
    for (unsigned n = 1; n <= 3; ++n)
        CHECK(mirror_check(n, 0, Rational(3, 4), 30).equal);
    CHECK(mirror_check(3, 1, 0.21, 30).max_deviation < 1e-11);
}

TEST_CASE("bound wavefunction decays like Ω^N")
{
    auto const lv = bound_energies_I({0.5, 1.0, 0.0}, 0, 1)[0];
    auto const r = bound_wavefunction(lv, 60);
    for (unsigned N = 1; N <= 60; ++N)
        CHECK(std::abs(r.values[N] / r.values[N - 1]) == doctest::Approx(lv.omega).epsilon(1e-12));
    auto const norm = radial_norm_sq(0, r, {0.5, 1.0, 0.0});
    CHECK(norm.converged);
    CHECK(norm.value > 0);
}

TEST_CASE("constants file")
{
    auto const good = write_temp("ncqm_constants_good.conf",
                                 "# test\ne_squared_gaussian = 2.307077552e-28\nm_electron = 9.1093837015e-31\n"
                                 "c = 299792458\nhbar = 1.054571817e-34  # trailing\n");
    auto const k = load_constants(good);
    CHECK(k.c == 299792458.0);
    auto const l0 = lambda0_estimate(k);
    CHECK(l0.lambda0 == doctest::Approx(1.06e-15).epsilon(1e-2));
    CHECK(l0.lambda0 / l0.classical_radius == doctest::Approx(0.375));
    CHECK(l0.fine_structure == doctest::Approx(1 / 137.036).epsilon(1e-5));

    CHECK_THROWS_AS(load_constants(write_temp("ncqm_constants_missing.conf", "c = 3e8\n")), ConfigError);
    CHECK_THROWS_AS(load_constants(write_temp("ncqm_constants_bad.conf", "c = fast\n")), ConfigError);
    CHECK_THROWS_AS(load_constants(write_temp("ncqm_constants_neg.conf", "c = -1\n")), ConfigError);
    CHECK_THROWS_AS(load_constants(std::filesystem::path("/nonexistent/ncqm.conf")), ConfigError);
}

TEST_CASE("self-energy trace")
{
    auto const s = self_energy_trace(500, {1.0, 1.0, 0.0});
    CHECK(s.target == doctest::Approx(0.375));
    CHECK(s.trace < s.target);
    CHECK(s.trace + s.tail == doctest::Approx(s.target).epsilon(1e-12));
    auto const scaled = self_energy_trace(500, {2.0, 3.0, 0.0});
    CHECK(scaled.trace == doctest::Approx(s.trace * 9 / 2).epsilon(1e-13));
}
