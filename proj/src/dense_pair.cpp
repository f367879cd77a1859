#include <erogers/errors.hpp>
#include <erogers/search.hpp>

#include <cmath>
#include <map>

namespace erogers {

nlohmann::json DensePair::to_json() const
{
    nlohmann::json levels = nlohmann::json::array();
    for (auto & l : trace)
        levels.push_back({{"level", l.level}, {"bucket", l.bucket}, {"a", l.a}, {"size", l.size},
            {"cycles_before", l.cycles_before}, {"cycles_after", l.cycles_after}});
    return {{"X", x.members()}, {"Y", y.members()}, {"max_degree", max_degree}, {"cycles", cycles},
        {"surviving_cycles", surviving_cycles}, {"delta", delta}, {"cross_edges", cross_edges}, {"density", density},
        {"trace", levels}, {"statement_density_bound", statement_density_bound},
        {"proof_density_bound", proof_density_bound}, {"size_bound", size_bound},
        {"statement_density_ok", statement_density_ok}, {"proof_density_ok", proof_density_ok}, {"size_ok", size_ok}};
}

DensePair ckprop_dense_pair(const Graph & g, int v0, int k)
{
    auto cycles = list_k_cycles_through(g, v0, k);
    if (cycles.empty())
        throw InputError("no " + std::to_string(k) + "-cycle through vertex " + std::to_string(v0));
    int d = g.max_degree();
    if (d < 2)
        throw InputError("maximum degree must be at least 2");

    int n = g.order();
    DensePair out;
    out.max_degree = d;
    out.cycles = static_cast<long long>(cycles.size());
    out.delta = static_cast<double>(cycles.size()) / std::pow(static_cast<double>(d), k - 1);

    std::vector<int> alive(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
        alive[i] = static_cast<int>(i);

    VertexSet prev(n);
    for (auto & c : cycles)
        prev.insert(c[1]);

    for (int level = 2; level <= k - 2; ++level) {
        // Bucket j holds degrees into prev in (d / 2^{j+1}, d / 2^j].
        std::map<int, int> bucket_of;
        for (int idx : alive) {
            int u = cycles[idx][level];
            if (bucket_of.contains(u))
                continue;
            long long deg = g.neighbours(u).intersection_count(prev);
            int j = 0;
            while (deg * (2LL << j) <= d)
                ++j;
            bucket_of[u] = j;
        }
        std::map<int, long long> load;
        for (int idx : alive)
            ++load[bucket_of[cycles[idx][level]]];
        int best = -1;
        for (auto [j, c] : load)
            if (best < 0 || c > load[best])
                best = j;

        VertexSet chosen(n);
        for (auto [u, j] : bucket_of)
            if (j == best)
                chosen.insert(u);
        std::vector<int> kept;
        for (int idx : alive)
            if (chosen.contains(cycles[idx][level]))
                kept.push_back(idx);

        DenseLevel lv;
        lv.level = level;
        lv.bucket = best;
        lv.a = d >> best;
        lv.size = chosen.count();
        lv.cycles_before = static_cast<long long>(alive.size());
        lv.cycles_after = static_cast<long long>(kept.size());
        out.trace.push_back(lv);

        // Every member has between a/2 and a neighbours in the previous level.
        chosen.for_each([&](int u) {
            int deg = g.neighbours(u).intersection_count(prev);
            if (2 * deg < lv.a || deg > lv.a)
                throw ValidationFault("dyadic bucket invariant violated");
        });
        alive = std::move(kept);
        prev = std::move(chosen);
    }

    out.x = prev;
    out.y = VertexSet(n);
    for (int idx : alive)
        out.y.insert(cycles[idx][k - 1]);
    out.surviving_cycles = static_cast<long long>(alive.size());
    out.cross_edges = count_cross_edges(g, out.x, out.y);
    out.density = static_cast<double>(out.cross_edges) / (static_cast<double>(out.x.count()) * out.y.count());
    if (out.cross_edges <= 0)
        throw ValidationFault("dense pair has no edges");

    double lg = std::log2(static_cast<double>(d));
    out.statement_density_bound = out.delta / std::pow(2 * lg, k);
    out.proof_density_bound = out.delta / (std::pow(2.0, k - 1) * std::pow(lg, k - 3));
    out.size_bound = out.delta * d / std::pow(lg, k - 3);
    out.statement_density_ok = out.density >= out.statement_density_bound;
    out.proof_density_ok = out.density >= out.proof_density_bound;
    out.size_ok = std::min(out.x.count(), out.y.count()) >= out.size_bound;
    return out;
}

} // namespace erogers
