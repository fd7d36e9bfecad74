#pragma once

#include <cstdint>
#include <vector>

namespace qconn {

// Success probability of measuring a marked element after `iterations`
// rounds of oracle sign flip + inversion about the mean, starting from the
// uniform state over N elements. Full N-dimensional evolution; reference
// implementation for cross-checking the closed form. N is capped at 2^16.
double statevector_success_prob(std::uint64_t n, const std::vector<std::uint64_t>& marked,
                                std::uint64_t iterations);

} // namespace qconn
