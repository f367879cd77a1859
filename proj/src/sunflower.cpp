#include <erogers/errors.hpp>
#include <erogers/search.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace erogers {

bool is_sunflower(const Sunflower & s)
{
    std::set<std::vector<int>> distinct(s.petals.begin(), s.petals.end());
    if (distinct.size() != s.petals.size())
        return false;
    for (std::size_t a = 0; a < s.petals.size(); ++a)
        for (std::size_t b = a + 1; b < s.petals.size(); ++b)
            if (intersection(s.petals[a], s.petals[b]) != s.core)
                return false;
    return true;
}

namespace {
    class SunflowerFinder {
    public:
        SunflowerFinder(int m, std::uint64_t cap) : m_(m), cap_(cap) {}

        // Sets are the reduced sets (core elements removed); returns indices.
        std::optional<std::vector<int>> find(const std::vector<std::vector<int>> & sets, const std::vector<int> & ids)
        {
            if (cap_ && ++nodes_ > cap_) {
                cut_ = true;
                return std::nullopt;
            }
            if (static_cast<int>(ids.size()) < m_)
                return std::nullopt;

            // Greedy maximal pairwise-disjoint subfamily.
            std::set<int> used;
            std::vector<int> disjoint;
            for (int id : ids) {
                auto & s = sets[id];
                if (std::none_of(s.begin(), s.end(), [&](int x) { return used.contains(x); })) {
                    disjoint.push_back(id);
                    used.insert(s.begin(), s.end());
                    if (static_cast<int>(disjoint.size()) == m_)
                        return disjoint;
                }
            }

            // Every set meets the union of the disjoint ones; branch on its
            // elements, most frequent first.
            std::map<int, int> freq;
            for (int id : ids)
                for (int x : sets[id])
                    if (used.contains(x))
                        ++freq[x];
            std::vector<std::pair<int, int>> ranked;
            for (auto [x, c] : freq)
                ranked.emplace_back(-c, x);
            std::sort(ranked.begin(), ranked.end());
            for (auto [negc, x] : ranked) {
                if (-negc < m_)
                    break;
                std::vector<std::vector<int>> reduced(sets.size());
                std::vector<int> sub;
                for (int id : ids) {
                    auto & s = sets[id];
                    if (std::binary_search(s.begin(), s.end(), x)) {
                        reduced[id] = s;
                        reduced[id].erase(std::find(reduced[id].begin(), reduced[id].end(), x));
                        sub.push_back(id);
                    }
                }
                if (auto found = find(reduced, sub))
                    return found;
                if (cut_)
                    return std::nullopt;
            }
            return std::nullopt;
        }

        bool cut() const { return cut_; }
        std::uint64_t nodes() const { return nodes_; }

    private:
        int m_;
        std::uint64_t cap_;
        std::uint64_t nodes_ = 0;
        bool cut_ = false;
    };
}

SunflowerSearch erdos_rado_sunflower(const std::vector<std::vector<int>> & family, int m, std::uint64_t node_cap)
{
    if (m < 2)
        throw InputError("sunflower size must be at least 2");
    std::vector<std::vector<int>> sets;
    std::set<std::vector<int>> seen;
    std::size_t t = family.empty() ? 0 : family.front().size();
    for (auto s : family) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("family member has a repeated element", s);
        if (s.size() != t || t == 0)
            throw InputError("family members must all have the same positive size", s);
        if (seen.insert(s).second)
            sets.push_back(std::move(s));
    }
    std::vector<int> ids(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        ids[i] = static_cast<int>(i);

    SunflowerFinder finder(m, node_cap);
    SunflowerSearch out;
    auto found = finder.find(sets, ids);
    out.nodes = finder.nodes();
    out.finished = ! finder.cut();
    if (found) {
        Sunflower sf;
        for (int id : *found)
            sf.petals.push_back(sets[id]);
        sf.core = sf.petals[0];
        for (std::size_t i = 1; i < sf.petals.size(); ++i)
            sf.core = intersection(sf.core, sf.petals[i]);
        if (! is_sunflower(sf))
            throw ValidationFault("Erdős–Rado recursion returned a non-sunflower");
        out.sunflower = std::move(sf);
    }
    return out;
}

} // namespace erogers
