#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace erogers {

// Counter-based generator: the i-th output is a pure function of
// (seed, label, i), so streams replay identically on every platform and
// distinct labels give independent substreams.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::string label = "root");

    std::uint64_t seed() const { return seed_; }
    const std::string & label() const { return label_; }
    std::uint64_t draws() const { return counter_; }

    SeededRng substream(std::string_view tag) const;
    SeededRng substream(std::string_view tag, std::uint64_t index) const;

    std::uint64_t next_u64();
    // Uniform on [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform on [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T> & v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    // Uniformly random k-subset of [0, n), sorted.
    std::vector<int> sample_subset(int n, int k);

private:
    std::uint64_t seed_;
    std::string label_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

} // namespace erogers
