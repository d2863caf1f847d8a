#include "grid.hpp"

#include <cmath>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm::cli {

Spacing parse_spacing(std::string_view text)
{
    if (text == "linear")
        return Spacing::Linear;
    if (text == "log")
        return Spacing::Log;
    throw PreconditionError("spacing must be linear or log, got " + std::string(text));
}

std::vector<double> make_grid(GridSpec const& spec)
{
    if (spec.count == 0)
        throw PreconditionError("grid count must be at least 1");
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max))
        throw PreconditionError("grid bounds must be finite");
    if (spec.spacing == Spacing::Log && !(spec.min > 0 && spec.max > 0))
        throw PreconditionError("log spacing needs positive bounds");

    std::vector<double> out(spec.count);
    if (spec.count == 1)
    {
        out[0] = spec.min;
        return out;
    }
    for (unsigned i = 0; i < spec.count; ++i)
    {
        double const t = double(i) / (spec.count - 1);
        out[i] = spec.spacing == Spacing::Linear
                     ? spec.min + t * (spec.max - spec.min)
                     : std::exp(std::log(spec.min) + t * (std::log(spec.max) - std::log(spec.min)));
    }
    // land exactly on the endpoints
    out.front() = spec.min;
    out.back() = spec.max;
    return out;
}

}  // namespace ncqm::cli
