#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace erogers {

// Fixed-universe subset of [0, n) stored as 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<int> members);

    static VertexSet full(int universe);
    static VertexSet from_members(int universe, const std::vector<int> & members);

    int universe() const { return universe_; }
    int count() const;
    bool empty() const;

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    // Smallest member >= from, or -1.
    int next(int from) const;
    int first() const { return next(0); }

    std::vector<int> members() const;

    template <typename Fn>
    void for_each(Fn && fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet & operator&=(const VertexSet & o);
    VertexSet & operator|=(const VertexSet & o);
    // Removes every member of o.
    VertexSet & subtract(const VertexSet & o);

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }

    int intersection_count(const VertexSet & o) const;
    bool intersects(const VertexSet & o) const;
    bool is_subset_of(const VertexSet & o) const;

    bool operator==(const VertexSet & o) const = default;
    // Lexicographic comparison of the sorted member lists.
    bool lex_less(const VertexSet & o) const;

    const std::vector<std::uint64_t> & words() const { return words_; }

    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace erogers
