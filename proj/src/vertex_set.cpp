#include <erogers/vertex_set.hpp>

#include <algorithm>

namespace erogers {

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
{
    for (int v : members)
        insert(v);
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

VertexSet VertexSet::from_members(int universe, const std::vector<int> & members)
{
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

int VertexSet::count() const
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::next(int from) const
{
    if (from >= universe_)
        return -1;
    std::size_t w = static_cast<std::size_t>(from) >> 6;
    auto bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w == words_.size())
            return -1;
        bits = words_[w];
    }
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet & VertexSet::operator&=(const VertexSet & o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

VertexSet & VertexSet::operator|=(const VertexSet & o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

VertexSet & VertexSet::subtract(const VertexSet & o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~o.words_[i];
    return *this;
}

int VertexSet::intersection_count(const VertexSet & o) const
{
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & o.words_[i]);
    return c;
}

bool VertexSet::intersects(const VertexSet & o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet & o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i])
            return false;
    return true;
}

bool VertexSet::lex_less(const VertexSet & o) const
{
    auto a = members(), b = o.members();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace erogers
