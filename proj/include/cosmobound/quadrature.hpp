#pragma once

#include <functional>

#include "cosmobound/errors.hpp"

namespace cosmobound {

struct Integral {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Intervals are bisected until the local error estimate meets
/// max(abs_tol_local, rel_tol * |local value|); exceeding max_intervals
/// subdivisions throws QuadratureError.
Integral integrate_adaptive(const std::function<double(double)>& f, double a,
                            double b, double rel_tol = 1e-9,
                            double abs_tol = 0.0, int max_intervals = 4096);

}  // namespace cosmobound
