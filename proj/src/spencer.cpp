#include <erogers/errors.hpp>
#include <erogers/search.hpp>

#include <cmath>

namespace erogers {

bool is_hypergraph_independent(const Hypergraph & h, const VertexSet & s)
{
    for (auto & e : h.edges()) {
        bool inside = true;
        for (int v : e)
            if (! s.contains(v)) {
                inside = false;
                break;
            }
        if (inside)
            return false;
    }
    return true;
}

SpencerResult spencer_independent_set(const Hypergraph & h, const SeededRng & rng, int trials)
{
    int n = h.order();
    SpencerResult out;
    if (h.size() == 0) {
        out.set = VertexSet::full(n);
        out.bound = n;
        return out;
    }
    auto k = h.common_edge_size();
    if (! k || *k < 2)
        throw InputError("spencer_independent_set needs a k-uniform hypergraph with k >= 2");
    if (trials < 1)
        throw InputError("need at least one trial");

    double d = static_cast<double>(*k) * h.size() / n;
    out.average_degree = d;
    out.probability = std::min(1.0, std::pow(1.0 / d, 1.0 / (*k - 1)));
    out.bound = (1.0 - 1.0 / *k) * n / std::pow(d, 1.0 / (*k - 1));

    for (int t = 0; t < trials; ++t) {
        auto stream = rng.substream("trial", static_cast<std::uint64_t>(t));
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (stream.bernoulli(out.probability))
                s.insert(v);
        for (auto & e : h.edges()) {
            bool inside = true;
            for (int v : e)
                if (! s.contains(v)) {
                    inside = false;
                    break;
                }
            if (inside)
                s.erase(e[stream.below(e.size())]);
        }
        int size = s.count();
        out.trial_sizes.push_back(size);
        if (out.best_trial < 0 || size > out.set.count() || (size == out.set.count() && s.lex_less(out.set))) {
            out.set = std::move(s);
            out.best_trial = t;
        }
    }
    if (! is_hypergraph_independent(h, out.set))
        throw ValidationFault("sample-and-delete returned a set containing an edge");
    return out;
}

} // namespace erogers
