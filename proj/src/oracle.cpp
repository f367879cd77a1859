#include <erogers/enumerate.hpp>
#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

namespace erogers {

Certificate ramsey_witness_check(const Graph & h, const Graph & f, const Graph & g, int t, int rf_t, const Budget & budget)
{
    Certificate cert("ramsey-witness");
    cert.param("H.order", h.order());
    cert.param("H.edges", h.edges());
    cert.param("F.edges", f.edges());
    cert.param("G.edges", g.edges());
    cert.param("t", t);
    cert.param("rF_t", rf_t);

    auto search = contains_subgraph(h, g, budget);
    Verdict gfree = search.absent() ? Verdict::Pass : search.found() ? Verdict::Fail : Verdict::Unknown;
    cert.check("G_free", gfree, search.found() ? nlohmann::json(search.embedding) : nlohmann::json());

    // A found set at or above the limit refutes; a small set only proves when optimal.
    auto below = [](const SetResult & r, int limit) {
        if (r.size() >= limit)
            return Verdict::Fail;
        return r.status == Optimality::Optimal ? Verdict::Pass : Verdict::Unknown;
    };
    auto alpha = max_independent_set(h, budget);
    Verdict av = below(alpha, t);
    cert.check("independence_below_t", av, av == Verdict::Fail ? nlohmann::json(alpha.set.members()) : nlohmann::json());
    cert.measure("independence_number", {{"size", alpha.size()}, {"status", to_string(alpha.status)}});

    auto ffree = max_f_free_subset(h, f, budget);
    Verdict fv = below(ffree, rf_t);
    cert.check("F_free_below_rFt", fv, fv == Verdict::Fail ? nlohmann::json(ffree.set.members()) : nlohmann::json());
    cert.measure("max_f_free_subset", {{"size", ffree.size()}, {"status", to_string(ffree.status)}});
    return cert;
}

nlohmann::json BruteForceF::to_json() const
{
    return {{"n", n}, {"value", value}, {"exact", exact}, {"graphs", graphs}, {"witness_edges", witness.edges()},
        {"nodes", nodes}};
}

BruteForceF brute_force_f(const Graph & f, const Graph & g, int n, const Budget & budget)
{
    if (f.size() < 1)
        throw InputError("F must have at least one edge");
    if (n < 1 || n > 8)
        throw InputError("brute_force_f supports 1 <= n <= 8", {{"n", n}});

    BruteForceF out;
    out.n = n;
    out.value = n + 1;
    for (auto & h : enumerate_g_free_graphs(g, n)) {
        auto best = max_f_free_subset(h, f, budget);
        ++out.graphs;
        out.nodes += best.nodes;
        if (best.status != Optimality::Optimal)
            out.exact = false;
        if (best.size() < out.value) {
            out.value = best.size();
            out.witness = h;
        }
    }
    if (out.graphs == 0)
        throw InputError("no G-free graph on n vertices");
    return out;
}

} // namespace erogers
