#pragma once

#include <string_view>
#include <vector>

namespace ncqm::cli {

enum class Spacing
{
    Linear,
    Log,
};

Spacing parse_spacing(std::string_view text);

struct GridSpec
{
    double min = 0;
    double max = 0;
    unsigned count = 100;
    Spacing spacing = Spacing::Linear;
};

/// Grid points from min to max inclusive; one point gives min. PreconditionError
/// on count 0, non-finite bounds, or non-positive bounds with log spacing.
std::vector<double> make_grid(GridSpec const& spec);

}  // namespace ncqm::cli
