#include <erogers/errors.hpp>
#include <erogers/search.hpp>

#include <cmath>

namespace erogers {

nlohmann::json DrcResult::to_json() const
{
    return {{"Z", z.members()}, {"size", z.count()}, {"cross_edges", cross_edges}, {"gamma", gamma},
        {"threshold", threshold}, {"target_size", target_size}, {"target_met", target_met},
        {"best_attempt", best_attempt}, {"attempt_sizes", attempt_sizes}};
}

long long count_cross_edges(const Graph & g, const VertexSet & x, const VertexSet & y)
{
    long long e = 0;
    x.for_each([&](int v) { e += g.neighbours(v).intersection_count(y); });
    return e;
}

std::optional<std::pair<int, int>> find_drc_violation(const Graph & g, const VertexSet & x, const VertexSet & z,
    double threshold)
{
    auto members = z.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        VertexSet common = g.neighbours(members[a]) & x;
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (common.intersection_count(g.neighbours(members[b])) < threshold)
                return std::make_pair(members[a], members[b]);
    }
    return std::nullopt;
}

DrcResult dependent_random_choice(const Graph & g, const VertexSet & x, const VertexSet & y, int s,
    const SeededRng & rng, int retries)
{
    if (x.universe() != g.order() || y.universe() != g.order())
        throw InputError("vertex sets do not match graph order");
    if (x.intersects(y))
        throw InputError("X and Y must be disjoint", (x & y).members());
    if (s < 1 || retries < 1)
        throw InputError("dependent_random_choice needs s >= 1 and retries >= 1");

    DrcResult out;
    out.cross_edges = count_cross_edges(g, x, y);
    if (out.cross_edges < 1)
        throw InputError("no edges between X and Y");
    double nx = x.count(), ny = y.count();
    out.gamma = out.cross_edges / (nx * ny);
    out.threshold = out.gamma * nx * std::pow(ny, -1.0 / s);
    out.target_size = 0.5 * std::pow(out.gamma, s) * ny;

    auto xs = x.members();
    for (int attempt = 0; attempt < retries; ++attempt) {
        auto stream = rng.substream("attempt", static_cast<std::uint64_t>(attempt));
        VertexSet a = y;
        for (int i = 0; i < s; ++i)
            a &= g.neighbours(xs[stream.below(xs.size())]);

        // Pairs of A with too few common neighbours in X; delete the vertex on
        // most of them until none remain.
        auto members = a.members();
        std::vector<std::vector<int>> bad(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            VertexSet common = g.neighbours(members[i]) & x;
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (common.intersection_count(g.neighbours(members[j])) < out.threshold) {
                    bad[i].push_back(static_cast<int>(j));
                    bad[j].push_back(static_cast<int>(i));
                }
        }
        std::vector<int> load(members.size());
        std::vector<bool> gone(members.size(), false);
        for (std::size_t i = 0; i < members.size(); ++i)
            load[i] = static_cast<int>(bad[i].size());
        while (true) {
            int worst = -1;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (! gone[i] && load[i] > 0 && (worst < 0 || load[i] > load[worst]))
                    worst = static_cast<int>(i);
            if (worst < 0)
                break;
            gone[worst] = true;
            a.erase(members[worst]);
            for (int j : bad[worst])
                if (! gone[j])
                    --load[j];
        }

        int size = a.count();
        out.attempt_sizes.push_back(size);
        if (out.best_attempt < 0 || size > out.z.count() || (size == out.z.count() && a.lex_less(out.z))) {
            out.z = std::move(a);
            out.best_attempt = attempt;
        }
    }
    if (auto v = find_drc_violation(g, x, out.z, out.threshold))
        throw ValidationFault("dependent random choice left a pair with too few common neighbours");
    out.target_met = out.z.count() >= out.target_size;
    return out;
}

} // namespace erogers
