#include <erogers/rng.hpp>

#include <algorithm>
#include <numeric>

namespace erogers {

namespace {
    std::uint64_t fnv1a(std::string_view s)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
}

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SeededRng::SeededRng(std::uint64_t seed, std::string label) :
    seed_(seed), label_(std::move(label)), key_(mix64(mix64(seed) ^ fnv1a(label_)))
{
}

SeededRng SeededRng::substream(std::string_view tag) const
{
    return SeededRng(seed_, label_ + "/" + std::string(tag));
}

SeededRng SeededRng::substream(std::string_view tag, std::uint64_t index) const
{
    return SeededRng(seed_, label_ + "/" + std::string(tag) + "#" + std::to_string(index));
}

std::uint64_t SeededRng::next_u64()
{
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
}

namespace {
__extension__ using u128 = unsigned __int128;
}

std::uint64_t SeededRng::below(std::uint64_t bound)
{
    // Lemire's multiply-shift with rejection.
    u128 m = static_cast<u128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(next_u64()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double SeededRng::uniform01()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<int> SeededRng::sample_subset(int n, int k)
{
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + below(static_cast<std::uint64_t>(n - i))]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace erogers
