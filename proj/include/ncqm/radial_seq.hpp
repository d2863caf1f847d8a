#pragma once

#include <string_view>
#include <vector>

#include "ncqm/special.hpp"

namespace ncqm {

/// Where a radial sequence came from.
enum class RadialSource
{
    NegativeE,
    LowScattering,
    EtaZero,
    EtaOne,
    UltraHigh,
    BoundI,
    BoundII,
    Recurrence,
    Potential,
    User,
};

std::string_view to_string(RadialSource s);

/*!
 * Radial factor R_j as its values on Fock levels.
 *
 * values[N] is the level-N value of the diagonal operator R_j(ϱ) that sits
 * between the creation and annihilation strings of Ψ_jm, so on outer level n
 * the wave operator uses values[n - j].
 */
template<class T>
struct BasicRadialSeq
{
    unsigned j = 0;
    std::vector<Complex<T>> values;
    RadialSource source = RadialSource::User;
};

using RadialSeq = BasicRadialSeq<double>;

}  // namespace ncqm
