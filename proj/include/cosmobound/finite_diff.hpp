#pragma once

#include <vector>

namespace cosmobound {

/// First derivative dy/dt on a strictly increasing, possibly non-uniform
/// grid. Three-point stencils throughout: central at interior nodes,
/// one-sided second-order at both ends. Requires >= 3 samples.
std::vector<double> derivative(const std::vector<double>& t,
                               const std::vector<double>& y);

}  // namespace cosmobound
