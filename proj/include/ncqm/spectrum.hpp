#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "ncqm/exact.hpp"
#include "ncqm/fuzzy.hpp"
#include "ncqm/radial_seq.hpp"

namespace ncqm {

enum class BoundBranch
{
    I,   //!< attractive, E < 0
    II,  //!< repulsive, E > 2/λ²
};

std::string_view to_string(BoundBranch b);

struct EnergyLevel
{
    BoundBranch branch = BoundBranch::I;
    unsigned n = 1;  //!< principal number, n >= j + 1
    unsigned j = 0;
    double E = 0;
    double kappa = 0;  //!< λα/n
    double omega = 0;  //!< decay ratio of the radial sequence, in (0, 1)
    double lambda = 1;
    double alpha = 1;
};

/// E = (1 - √(1+κ²))/λ² for n = j+1 .. j+n_count; needs α > 0.
std::vector<EnergyLevel> bound_energies_I(Params const& params, unsigned j, unsigned n_count);
/// E = (1 + √(1+κ²))/λ², the mirror of branch I about 2/λ²; needs α < 0.
std::vector<EnergyLevel> bound_energies_II(Params const& params, unsigned j, unsigned n_count);
/// Branch chosen by the sign of α.
std::vector<EnergyLevel> bound_energies(Params const& params, unsigned j, unsigned n_count);

/// -α²/(2n²)
double bohr_energy(unsigned n, double alpha);
/// Coefficient of λ² in the small-λ expansion of the branch-I energy, α⁴/(8n⁴).
double bohr_lambda2_coefficient(unsigned n, double alpha);

/*!
 * Bound energies from the termination condition alone.
 *
 * Solves n = αλ/(2ηs) in E, with ηs = |η|√(|η|²+1) below zero and
 * |η|√(|η|²-1) above 2/λ², by bisection and a secant polish. Brackets are
 * the closed-form energies ±10%; NoRootError if one holds no sign change.
 */
std::vector<EnergyLevel> termination_roots(unsigned j, Params const& params, unsigned n_count);

/// Ω^N F(j+1-n, -N, 2j+2; ∓2κ/Ω) with the branch sign, N = 0..n_max.
RadialSeq bound_wavefunction(EnergyLevel const& level, unsigned n_max);

/// Exact branch-I or branch-II radial values when √(1+κ²) is rational.
std::vector<Rational> bound_wavefunction_exact(BoundBranch branch, unsigned n, unsigned j,
                                               Rational const& kappa, unsigned n_max);

struct MirrorReport
{
    bool equal = false;
    double max_deviation = 0;  //!< relative to the largest |R^I(N)|; 0 on the exact path
};

/*!
 * R^II(-α)(N) = (-1)^N R^I(α)(N) for N <= n_max, with α = κn/λ at λ = 1.
 *
 * Both sides come from the energy closed form at E^I and E^II, not from the
 * Ω form. The exact path needs √(1+κ²) rational and compares rationals.
 */
MirrorReport mirror_check(unsigned n, unsigned j, Rational const& kappa, unsigned n_max);
MirrorReport mirror_check(unsigned n, unsigned j, double kappa, unsigned n_max);

struct RadialNorm
{
    double value = 0;  //!< sum over the supplied levels
    double tail = 0;   //!< geometric bound on the rest; infinite if divergent
    unsigned terms = 0;
    bool converged = false;  //!< ratio test passed and the stopping rule met
};

/*!
 * ‖Ψ_jm‖² from the radial values alone.
 *
 * (4πλ^{3+2j}/(j!)²) C(2j, j-m) Σ_N (N+j+1) C(N+2j+1, 2j+1) |R(N)|².
 * Summation stops once a term is below 1e-16 of the sum and the tail bound
 * is below 1e-14 of it.
 */
RadialNorm radial_norm_sq(unsigned j, RadialSeq const& radial, Params const& params);
RadialNorm radial_norm_sq(unsigned j, int m, RadialSeq const& radial, Params const& params);

struct PhysicalConstants
{
    double e_squared = 0;  //!< e²/(4πε₀) in J·m
    double m_electron = 0;
    double c = 0;
    double hbar = 0;
};

/*!
 * Reads `key = value` lines; `#` starts a comment.
 *
 * Without an explicit path, NCQM_CONSTANTS from the environment wins over
 * the built-in default file. ConfigError on a missing key or bad number.
 */
PhysicalConstants load_constants(std::optional<std::filesystem::path> path = std::nullopt);

struct Lambda0
{
    double lambda0 = 0;            //!< (3/8) e²/(mc²) in m
    double classical_radius = 0;   //!< e²/(mc²)
    double fine_structure = 0;     //!< α₀ = e²/(ħc)
    double bohr_radius = 0;        //!< ħ²/(m e²)
    double ratio = 0;              //!< λ₀/a₀ = (3/8) α₀²
    double scale_printed = 0;      //!< (9/64) α₀²
    double scale_squared = 0;      //!< (λ₀/a₀)² = (9/64) α₀⁴
};

Lambda0 lambda0_estimate(PhysicalConstants const& k);

struct SelfEnergy
{
    double trace = 0;   //!< truncated sum over levels 1..n_max
    double target = 0;  //!< (3/8) q²/λ
    double tail = 0;    //!< exact remainder of the level sum
};

/*!
 * (λ³/2) Σ_{n=1}^{n_max} (n+1) Tr_n[E_j E_j], E_j = (q/λ³) x_j/(N(N+1)(N+2)).
 *
 * The level trace of x_j x_j is summed from the coordinate matrix elements;
 * q is params.alpha.
 */
SelfEnergy self_energy_trace(unsigned n_max, Params const& params);

}  // namespace ncqm
