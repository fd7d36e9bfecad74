#pragma once

#include <cstdint>

namespace qconn {

// Counts oracle probes charged to an algorithm. One ledger per trial.
class QueryLedger {
public:
    void charge(std::uint64_t units = 1) { count_ += units; }
    std::uint64_t count() const { return count_; }
    void reset() { count_ = 0; }

private:
    std::uint64_t count_ = 0;
};

} // namespace qconn
