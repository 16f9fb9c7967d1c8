#include "cosmobound/finite_diff.hpp"

#include "cosmobound/errors.hpp"

namespace cosmobound {

std::vector<double> derivative(const std::vector<double>& t,
                               const std::vector<double>& y) {
    const std::size_t n = t.size();
    if (n < 3 || y.size() != n)
        throw InsufficientSamples(
            "derivative needs >= 3 samples with matching array lengths");
    for (std::size_t i = 1; i < n; ++i)
        if (!(t[i] > t[i - 1]))
            throw NonMonotoneTimes("sample times must be strictly increasing");

    std::vector<double> d(n);
    {
        const double h1 = t[1] - t[0], h2 = t[2] - t[1];
        d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[0] +
               (h1 + h2) / (h1 * h2) * y[1] -
               h1 / (h2 * (h1 + h2)) * y[2];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = t[i] - t[i - 1], h2 = t[i + 1] - t[i];
        d[i] = -h2 / (h1 * (h1 + h2)) * y[i - 1] +
               (h2 - h1) / (h1 * h2) * y[i] +
               h1 / (h2 * (h1 + h2)) * y[i + 1];
    }
    {
        const double h1 = t[n - 1] - t[n - 2], h2 = t[n - 2] - t[n - 3];
        d[n - 1] = (2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[n - 1] -
                   (h1 + h2) / (h1 * h2) * y[n - 2] +
                   h1 / (h2 * (h1 + h2)) * y[n - 3];
    }
    return d;
}

}  // namespace cosmobound
