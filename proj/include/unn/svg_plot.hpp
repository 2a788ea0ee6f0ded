#pragma once

#include <array>
#include <string>
#include <vector>

#include "unn/dataset.hpp"
#include "unn/ordering.hpp"

namespace unn {

// Position of a slot on the color ramp: slot / (m - 1), so slot 0 maps to
// the ramp start and slot m-1 to the ramp end.
double ramp_position(int slot, int m);

// Fixed perceptually-ordered ramp (8 viridis stops, linearly interpolated).
// Returns RGB in [0, 1].
std::array<double, 3> color_ramp(double t);

// Standalone SVG 1.1 scatter plot of the chosen axes, one circle per
// pattern, filled by the pattern's latent slot via color_ramp. Two axes are
// plotted directly; three axes go through a fixed isometric orthographic
// projection. Axes are auto-scaled with a 5% margin.
std::string plot_embedding(const Dataset& data, const LatentOrdering& ordering,
                           const std::vector<int>& dims);

} // namespace unn
