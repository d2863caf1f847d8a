#pragma once

#include <string_view>
#include <vector>

#include "ncqm/exact.hpp"
#include "ncqm/fuzzy.hpp"
#include "ncqm/radial_seq.hpp"

namespace ncqm {

enum class Regime
{
    NegativeE,
    LowScattering,
    EtaZero,
    EtaOne,
    UltraHigh,
};

std::string_view to_string(Regime r);

/// Energy with its derived wave number k (k² = 2E) and η = kλ/2.
struct EnergyContext
{
    double E = 0;
    cplx k;
    cplx eta;
    Regime regime = Regime::EtaZero;
};

/// Regime by energy; float boundaries use a 1e-14·(2/λ²) window.
EnergyContext classify(double E, Params const& params);
/// Regime by exact comparison.
Regime classify_exact(Rational const& E, Rational const& lambda);

/// Coefficients of (a0 x + b0) y'' + (a1 x + b1) y' + (a2 x + b2) y = 0.
struct OdeCoefficients
{
    cplx a0, a1, a2, b0, b1, b2;
    cplx D_sq;  //!< a1² - 4 a0 a2
};

OdeCoefficients ode_coefficients(unsigned j, double E, Params const& params);

enum class Branch
{
    Plus,
    Minus,
};

/*!
 * Closed-form radial values R_j(N), N = 0..n_max.
 *
 * Plus uses the regime's own specialization (real arithmetic below zero and
 * above 2/λ², the conformal-momentum form on the scattering band). Minus
 * uses the general two-sign formula with the other sign of the square root.
 * Both are the same function through the Euler transformation. Energies
 * within 1e-8 of η = 0 or η = 1 are evaluated by the general formula and by
 * the degenerate one, cross-checked, and the degenerate values returned.
 */
RadialSeq radial_closed_form(unsigned j, double E, Params const& params, unsigned n_max,
                             Branch branch = Branch::Plus);

/// The general formula [1 ± 2ηs - 2η²]^N F(j+1 ± αλ/(2ηs), -N, 2j+2; ±4ηs/(1 ± 2ηs - 2η²)),
/// s = √(η²-1) principal.
RadialSeq radial_generic(unsigned j, cplx eta, Params const& params, unsigned n_max,
                         Branch branch);

/// -(2α)^{j+1/2}/(2j+1)! φ(-N, 2j+2, 2αλ).
RadialSeq radial_eta_zero(unsigned j, Params const& params, unsigned n_max);
/// -(-1)^N (2α)^{j+1/2}/(2j+1)! φ(-N, 2j+2, -2αλ).
RadialSeq radial_eta_one(unsigned j, Params const& params, unsigned n_max);

/*!
 * The general formula in rational arithmetic.
 *
 * Needs η²(η² - 1) to be the square of a rational, with η² = Eλ²/2 outside
 * [0, 1]; then ηs is rational and so is every value.
 */
std::vector<Rational> radial_closed_form_exact(unsigned j, Rational const& E,
                                               Rational const& lambda, Rational const& alpha,
                                               unsigned n_max, Branch branch);

/// Ordinary scattering solution e^{ikr} φ(j+1-iα/k, 2j+2, -2ikr), k = √(2E).
cplx commutative_radial(unsigned j, double E, double alpha, double r);
/// Ordinary bound state e^{-αr/n} φ(j+1-n, 2j+2, 2αr/n).
double commutative_bound_radial(unsigned n, unsigned j, double alpha, double r);

/*!
 * R_j(N) from the level recurrence of (1/λ)[a†,[a,Ψ]] - 2αΨ - k² rΨ = 0.
 *
 * The stencil is read from the operator matrices, and R(0) is seeded with
 * the closed-form value. Throws BreakdownError if a leading coefficient
 * vanishes.
 */
RadialSeq radial_from_recurrence(unsigned j, double E, Params const& params, unsigned n_max);

/// Per-level residual of the recurrence, relative to the largest term on that level.
std::vector<double> recurrence_residual(RadialSeq const& radial, double E, Params const& params);

}  // namespace ncqm
