#pragma once

#include <chrono>
#include <cstdint>

namespace erogers {

// Resource limit for anytime searches. Zero means unlimited. Node limits are
// deterministic; wall-clock limits are not, so reproducible runs use nodes.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_time{0};

    static Budget unlimited() { return {}; }
    static Budget nodes(std::uint64_t n) { return {n, std::chrono::milliseconds{0}}; }
    static Budget millis(long ms) { return {0, std::chrono::milliseconds{ms}}; }
};

class BudgetMeter {
public:
    explicit BudgetMeter(const Budget & b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Charges one node; returns false once the budget is exhausted.
    bool tick()
    {
        if (exhausted_)
            return false;
        ++nodes_;
        if (budget_.max_nodes && nodes_ > budget_.max_nodes)
            exhausted_ = true;
        else if (budget_.max_time.count() && (nodes_ & 1023) == 0
            && std::chrono::steady_clock::now() - start_ > budget_.max_time)
            exhausted_ = true;
        return ! exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace erogers
