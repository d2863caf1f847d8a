#pragma once

#include <string_view>
#include <vector>

#include "ncqm/fuzzy.hpp"
#include "ncqm/radial_seq.hpp"

namespace ncqm {

enum class Edge
{
    Upper,  //!< E in (0, 1/λ²], reached from Im E > 0
    Lower,  //!< E in (1/λ², 2/λ²)
    OffCut,
};

std::string_view to_string(Edge e);

struct Momentum
{
    cplx p;
    Edge edge = Edge::OffCut;
};

/*!
 * p = √(2E(1 - λ²E/2)) on the sheet reached from E + i0.
 *
 * Real E in (0, 2/λ²) gives p in (0, 1/λ] with the edge tag. Below zero
 * p = +i|p|, above 2/λ² p = -i|p|. Complex E takes the principal root.
 */
Momentum p_of_E(cplx E, Params const& params);
Momentum p_of_E(double E, Params const& params);

/*!
 * E = (1 + i√(λ²p² - 1))/λ², the root that p_of_E maps back to p.
 *
 * Off the real E axis this is the upper half-plane root; for real E the
 * two candidates are told apart by the edge tag or the sign of Im p.
 */
cplx E_of_p(Momentum const& p, Params const& params);

struct SMatrixValue
{
    cplx S;
    double phase_shift = 0;  //!< δ with S = e^{2iδ}
};

/// Γ(j+1 - iα/p)/Γ(j+1 + iα/p) through log Γ; PoleError at bound-state poles.
SMatrixValue smatrix_at_momentum(unsigned j, cplx p, double alpha);
SMatrixValue smatrix_nc(unsigned j, cplx E, Params const& params);
/// Γ(j+1 - iα/k)/Γ(j+1 + iα/k), k = √(2E), E > 0.
SMatrixValue smatrix_qm(unsigned j, double E, double alpha);

struct PhaseSweep
{
    std::vector<SMatrixValue> values;
    std::vector<std::size_t> flagged;  //!< indices where δ jumped by more than π/2
};

/// δ made continuous along the given order of values (shifts by multiples of π).
PhaseSweep unwrap_phases(std::vector<SMatrixValue> values);
PhaseSweep smatrix_sweep_nc(unsigned j, std::vector<double> const& energies, Params const& params);
PhaseSweep smatrix_sweep_qm(unsigned j, std::vector<double> const& energies, double alpha);

/// E at the poles p = iα/n, n = j+1 .. j+count, through E_of_p.
std::vector<double> pole_energies(unsigned j, Params const& params, unsigned count);

struct AsymptoticTerms
{
    cplx term_in;   //!< carries u^N, u = (p - iλE)/(p + iλE)
    cplx term_out;  //!< carries u^{-N}
    cplx coeff_in;  //!< r-independent factor of term_in
    cplx coeff_out;
    double p = 0;   //!< signed momentum used: -|p| on the lower edge
    double series_ratio = 0;  //!< |z| of both connection-formula series
};

/*!
 * The two connection-formula terms of R_{Ej} at Fock level n.
 *
 * r = λ(n+1). Their sum is the closed-form value at that level and
 * (-1)^{j+1} coeff_out/coeff_in is the S-matrix at the signed momentum.
 * ConvergenceError when |z| = 1/(2λ|p|) is too close to 1 for the 2F1 series.
 */
AsymptoticTerms asymptotic_decomposition(unsigned j, double E, Params const& params, unsigned n);

struct PrefactorComparison
{
    cplx bernoulli;       //!< Stirling form with the Bernoulli correction series
    cplx exact;           //!< the same factor from Γ ratios
    unsigned terms = 0;   //!< correction terms summed
    double truncation = 0;  //!< |first dropped term|, relative
};

/*!
 * The incoming-term prefactor at level n in its Bernoulli-series form.
 *
 * max_terms caps the correction series (0 leaves pure Stirling); the sum
 * otherwise stops at its smallest term. The Γ-ratio value comes along for
 * comparison.
 */
PrefactorComparison prefactor_via_lngamma(unsigned j, double E, Params const& params, unsigned n,
                                          unsigned max_terms = 31);

struct ScatteringMirror
{
    double max_deviation = 0;  //!< max_N |R^II(-α) - (-1)^N R^I(α)| / max|R^I|
    double prefactor_deviation = 0;  //!< |w^I + w^II|, w = (p + iλE)/(p - iλE)
};

/// R at E = 1/λ² - eps with +p against E = 1/λ² + eps with -p and -α.
ScatteringMirror scattering_mirror_check(unsigned j, double eps, Params const& params,
                                         unsigned n_max);

}  // namespace ncqm
