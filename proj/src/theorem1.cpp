#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

#include <cmath>

namespace erogers {

Theorem1Result theorem1_build(int d, int r, int R, const Graph & f, const SeededRng & rng, const Theorem1Options & options)
{
    if (f.size() < 1)
        throw InputError("F must have at least one edge");
    if (auto tri = find_triangle(f))
        throw InputError("F contains a triangle", {{"triangle", *tri}});

    Theorem1Result out{efr_hypergraph(d, r, R), {}, {}, {}, Certificate("theorem1")};
    auto & cert = out.certificate;
    const auto & h = out.efr.hypergraph;

    auto [line, cover] = line_intersection_graph(h);
    out.cover = std::move(cover);
    auto blown = random_blowup(out.cover, f, rng.substream("blowup"));
    out.graph = std::move(blown.first);
    out.colouring = std::move(blown.second);

    const int t = f.order();
    const long long N = out.efr.declared_order;
    const int n = out.graph.order();

    cert.param("efr.d", d);
    cert.param("efr.r", r);
    cert.param("efr.R", R);
    cert.param("efr.N", N);
    cert.param("F.order", t);
    cert.param("F.edges", f.edges());
    cert.seed(rng.label() + "/blowup", rng.seed());
    cert.attach("efr", efr_certificate(out.efr));

    auto violation = find_cover_violation(out.cover);
    cert.check("cover_edge_disjoint", ! violation, violation ? *violation : nlohmann::json());
    auto uncovered = find_uncovered_edge(out.cover);
    cert.check("cover_total", ! uncovered, uncovered ? nlohmann::json(*uncovered) : nlohmann::json());

    auto tri = find_triangle(out.graph);
    cert.check("triangle_free", ! tri, tri ? nlohmann::json(*tri) : nlohmann::json());

    cert.measure("vertices", n);
    cert.measure("edges", out.graph.size());
    cert.measure("host_edges", line.size());
    cert.measure("cliques", out.cover.cliques.size());

    // The union bound counts N-sets among at most N^2 vertices.
    bool within_square = static_cast<double>(n) <= static_cast<double>(N) * static_cast<double>(N);
    cert.measure("order_at_most_N_squared", within_square);
    auto bound = theorem1_failure_bound(t, R, N);
    auto bound_json = bound.to_json();
    if (! within_square)
        bound_json["guaranteed"] = nullptr;
    cert.measure("failure_bound", bound_json);
    double required = std::ceil(3.0 * t * std::log(static_cast<double>(t)) * std::log(static_cast<double>(N)));
    cert.measure("required_R", required);
    cert.measure("R_meets_rule", static_cast<double>(R) >= required);

    if (options.measure && n <= options.measure_max_order) {
        auto best = max_f_free_subset(out.graph, f, options.measure_budget);
        cert.measure("max_f_free_subset", {{"size", best.size()}, {"status", to_string(best.status)},
                                              {"target_N", N}, {"below_target", best.size() < N}});
    } else {
        cert.measure("max_f_free_subset", {{"status", "skipped"}, {"target_N", N}});
    }
    return out;
}

} // namespace erogers
