#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <set>

namespace erogers {

nlohmann::json GirthHypergraphParams::to_json() const
{
    nlohmann::json log = nlohmann::json::array();
    for (auto & rec : pruning)
        log.push_back({{"length", rec.length}, {"cycles", rec.cycles}, {"edges_removed", rec.edges_removed}});
    return {{"t", t}, {"r", r}, {"p", p}, {"delta", delta}, {"sampled_edges", sampled_edges}, {"pruning", log}};
}

GirthHypergraph random_girth_hypergraph(int t, int r, const SeededRng & rng)
{
    if (r < 2)
        throw InputError("uniformity r must be at least 2");
    if (t < r)
        throw InputError("t must be at least r");
    double p = std::pow(static_cast<double>(t), 1.0 - r + 1.0 / (2.0 * r));
    if (p > 1.0)
        throw InputError("edge probability exceeds 1", {{"t", t}, {"r", r}, {"p", p}});
    double subsets = std::exp(std::lgamma(t + 1.0) - std::lgamma(r + 1.0) - std::lgamma(t - r + 1.0));
    if (subsets > 5e7)
        throw InputError("too many r-subsets to sample", {{"t", t}, {"r", r}, {"subsets", subsets}});

    auto edge_rng = rng.substream("edges");
    std::vector<HyperEdge> sampled;
    HyperEdge combo(r);
    for (int i = 0; i < r; ++i)
        combo[i] = i;
    while (true) {
        if (edge_rng.bernoulli(p))
            sampled.push_back(combo);
        int i = r - 1;
        while (i >= 0 && combo[i] == t - r + i)
            --i;
        if (i < 0)
            break;
        ++combo[i];
        for (int j = i + 1; j < r; ++j)
            combo[j] = combo[j - 1] + 1;
    }

    GirthHypergraph out;
    out.sampled = Hypergraph(t, sampled, r);
    auto & params = out.params;
    params.t = t;
    params.r = r;
    params.p = p;
    params.delta = 1.0 / (5.0 * r * r);
    params.sampled_edges = static_cast<long long>(sampled.size());

    std::vector<char> removed(sampled.size(), 0);
    for (int len = 2; len <= r + 1; ++len) {
        PruneRecord rec;
        rec.length = len;
        std::vector<char> used(sampled.size(), 0);
        for_each_loose_cycle(out.sampled, len, [&](const LooseCycle & c) {
            for (int e : c.edges)
                if (used[e])
                    return true;
            for (int e : c.edges) {
                used[e] = 1;
                if (! removed[e]) {
                    removed[e] = 1;
                    ++rec.edges_removed;
                }
            }
            rec.cycles.push_back(c.edges);
            return true;
        });
        params.pruning.push_back(std::move(rec));
    }

    std::vector<HyperEdge> kept;
    for (std::size_t i = 0; i < sampled.size(); ++i)
        if (! removed[i])
            kept.push_back(sampled[i]);
    out.hypergraph = Hypergraph(t, std::move(kept), r);

    auto girth = hypergraph_girth_at_least(out.hypergraph, r + 2);
    if (! girth.pass)
        throw ValidationFault("pruned hypergraph still has a short loose cycle");
    auto & cert = out.certificate;
    cert.param("t", t);
    cert.param("r", r);
    cert.param("p", p);
    cert.param("delta", params.delta);
    cert.seed(rng.label() + "/edges", rng.seed());
    cert.check("girth_at_least_r_plus_2", girth.pass, girth.pass ? nlohmann::json() : girth.witness(out.hypergraph));
    cert.measure("sampled_edges", params.sampled_edges);
    cert.measure("edges", out.hypergraph.size());
    cert.measure("pruning", params.to_json()["pruning"]);
    return out;
}

long long count_s_edges(const Hypergraph & h, const VertexSet & s)
{
    long long count = 0;
    for (auto & e : h.edges()) {
        int outside = 0;
        for (int v : e)
            outside += s.contains(v) ? 0 : 1;
        count += outside == 1;
    }
    return count;
}

double sprop_threshold(int t, int r, int s)
{
    double p = std::pow(static_cast<double>(t), 1.0 - r + 1.0 / (2.0 * r));
    double binom = std::exp(std::lgamma(s + 1.0) - std::lgamma(r) - std::lgamma(s - r + 2.0));
    if (s < r - 1)
        binom = 0;
    return 0.1 * std::round(binom) * (t - s) * p;
}

nlohmann::json SPropReport::to_json() const
{
    return {{"t", t}, {"r", r}, {"delta", delta}, {"p", p}, {"s_lower", s_lower}, {"exhaustive", exhaustive},
        {"evaluated", evaluated}, {"passed", passed}, {"min_ratio", min_ratio}, {"per_size", per_size},
        {"samples", samples}};
}

SPropReport sprop_statistics(const Hypergraph & fstar, int r, int sample_count, const SeededRng & rng)
{
    if (r < 2)
        throw InputError("uniformity r must be at least 2");
    SPropReport rep;
    const int t = fstar.order();
    rep.t = t;
    rep.r = r;
    rep.delta = 1.0 / (5.0 * r * r);
    rep.p = std::pow(static_cast<double>(t), 1.0 - r + 1.0 / (2.0 * r));
    rep.s_lower = std::pow(static_cast<double>(t), 1.0 - rep.delta);
    rep.min_ratio = std::numeric_limits<double>::infinity();

    std::vector<int> sizes;
    for (int s = static_cast<int>(std::floor(rep.s_lower)) + 1; s < t; ++s)
        if (s > rep.s_lower)
            sizes.push_back(s);

    auto record = [&](int s, long long count) {
        double threshold = sprop_threshold(t, r, s);
        bool pass = static_cast<double>(count) >= threshold;
        ++rep.evaluated;
        rep.passed += pass;
        if (threshold > 0)
            rep.min_ratio = std::min(rep.min_ratio, static_cast<double>(count) / threshold);
        auto & agg = rep.per_size[std::to_string(s)];
        if (agg.is_null())
            agg = {{"sets", 0}, {"passed", 0}, {"min_count", count}, {"threshold", threshold}};
        agg["sets"] = agg["sets"].get<long long>() + 1;
        agg["passed"] = agg["passed"].get<long long>() + (pass ? 1 : 0);
        agg["min_count"] = std::min(agg["min_count"].get<long long>(), count);
        return pass;
    };

    if (t <= 20) {
        rep.exhaustive = true;
        std::vector<std::uint32_t> masks;
        for (auto & e : fstar.edges()) {
            std::uint32_t m = 0;
            for (int v : e)
                m |= 1U << v;
            masks.push_back(m);
        }
        for (int s : sizes) {
            for (std::uint32_t set = 0; set < (1U << t); ++set) {
                if (std::popcount(set) != s)
                    continue;
                long long count = 0;
                for (auto m : masks)
                    count += std::popcount(m & ~set) == 1;
                record(s, count);
            }
        }
    } else if (! sizes.empty()) {
        auto draw = rng.substream("sprop");
        for (int i = 0; i < sample_count; ++i) {
            int s = sizes[draw.below(sizes.size())];
            auto members = draw.sample_subset(t, s);
            long long count = count_s_edges(fstar, VertexSet::from_members(t, members));
            bool pass = record(s, count);
            rep.samples.push_back({{"s", s}, {"count", count}, {"pass", pass}, {"members", members}});
        }
    }
    if (rep.evaluated == 0 || ! std::isfinite(rep.min_ratio))
        rep.min_ratio = 0;
    return rep;
}

} // namespace erogers
