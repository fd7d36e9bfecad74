#include "qconn/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qconn {

double statevector_success_prob(std::uint64_t n, const std::vector<std::uint64_t>& marked,
                                std::uint64_t iterations) {
    if (n == 0) throw std::invalid_argument("empty search space");
    if (n > (1ull << 16)) throw std::invalid_argument("statevector space capped at 2^16");
    std::vector<std::uint8_t> is_marked(n, 0);
    for (std::uint64_t m : marked) {
        if (m >= n) throw std::invalid_argument("marked index out of range");
        if (is_marked[m]) throw std::invalid_argument("duplicate marked index");
        is_marked[m] = 1;
    }
    std::vector<double> amp(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::uint64_t it = 0; it < iterations; ++it) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (is_marked[i]) amp[i] = -amp[i];
        double mean = 0.0;
        for (double a : amp) mean += a;
        mean /= static_cast<double>(n);
        for (double& a : amp) a = 2.0 * mean - a;
    }
    double p = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (is_marked[i]) p += amp[i] * amp[i];
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

} // namespace qconn
