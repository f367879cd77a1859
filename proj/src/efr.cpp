#include <erogers/efr.hpp>
#include <erogers/errors.hpp>

#include <algorithm>
#include <cmath>

namespace erogers {

namespace {
    void enumerate_points(int d, int remaining, Point & prefix, std::vector<Point> & out)
    {
        int left = d - static_cast<int>(prefix.size());
        if (left == 1) {
            int x = static_cast<int>(std::lround(std::sqrt(static_cast<double>(remaining))));
            for (int c = std::max(1, x - 1); c <= x + 1; ++c)
                if (c * c == remaining) {
                    prefix.push_back(c);
                    out.push_back(prefix);
                    prefix.pop_back();
                }
            return;
        }
        // Each later coordinate needs at least 1.
        for (int x = 1; x * x + (left - 1) <= remaining; ++x) {
            prefix.push_back(x);
            enumerate_points(d, remaining - x * x, prefix, out);
            prefix.pop_back();
        }
    }

    long long ipow(long long b, int e)
    {
        long long out = 1;
        while (e-- > 0)
            out *= b;
        return out;
    }
}

SpherePointSet sphere_points(int d, int r)
{
    if (d < 1 || r < 1)
        throw InputError("sphere_points needs d >= 1 and r >= 1");
    SpherePointSet s{d, r, {}};
    if (d > r * r)
        return s;
    Point prefix;
    enumerate_points(d, r * r, prefix, s.points);
    return s;
}

std::pair<int, Point> EFRInstance::vertex_label(int v) const
{
    int part = static_cast<int>(std::upper_bound(part_offsets.begin(), part_offsets.end(), v) - part_offsets.begin());
    long long index = v - part_offsets[part - 1];
    long long side = static_cast<long long>(part) * r;
    Point p(d);
    for (int j = 0; j < d; ++j) {
        p[j] = static_cast<int>(index % side) + 1;
        index /= side;
    }
    return {part, p};
}

int EFRInstance::vertex_id(int part, const Point & p) const
{
    long long side = static_cast<long long>(part) * r;
    long long index = 0, weight = 1;
    for (int j = 0; j < d; ++j) {
        index += (p[j] - 1) * weight;
        weight *= side;
    }
    return static_cast<int>(part_offsets[part - 1] + index);
}

EFRInstance efr_hypergraph(int d, int r, int R)
{
    if (d == 1)
        throw InputError("d = 1 is not supported: the direction set is a single point and the "
                         "non-collinearity argument degenerates");
    if (d < 2 || r < 1 || R < 2)
        throw InputError("efr_hypergraph needs d >= 2, r >= 1, R >= 2");

    EFRInstance inst;
    inst.d = d;
    inst.r = r;
    inst.R = R;
    inst.directions = sphere_points(d, r);
    if (inst.directions.points.empty())
        throw InputError("no positive integer points on the sphere of radius " + std::to_string(r)
            + " in dimension " + std::to_string(d));

    long long offset = 0;
    for (int i = 1; i <= R; ++i) {
        inst.part_offsets.push_back(offset);
        inst.part_sizes.push_back(ipow(static_cast<long long>(i) * r, d));
        offset += inst.part_sizes.back();
    }
    inst.declared_order = offset;
    if (offset > 2'000'000'000LL)
        throw InputError("declared vertex count exceeds the supported range");

    std::vector<HyperEdge> edges;
    long long base_count = ipow(r, d);
    edges.reserve(static_cast<std::size_t>(base_count * inst.directions.points.size()));
    Point x(d, 1), y(d);
    for (long long idx = 0; idx < base_count; ++idx) {
        long long rest = idx;
        for (int j = 0; j < d; ++j) {
            x[j] = static_cast<int>(rest % r) + 1;
            rest /= r;
        }
        for (auto & a : inst.directions.points) {
            HyperEdge e;
            e.reserve(R);
            for (int i = 0; i < R; ++i) {
                for (int j = 0; j < d; ++j)
                    y[j] = x[j] + i * a[j];
                e.push_back(inst.vertex_id(i + 1, y));
            }
            edges.push_back(std::move(e));
        }
    }
    std::sort(edges.begin(), edges.end());
    inst.hypergraph = Hypergraph(static_cast<int>(offset), std::move(edges), R);
    return inst;
}

Certificate efr_certificate(const Hypergraph & h, int R, long long declared_order)
{
    Certificate cert("efr");
    double N = static_cast<double>(declared_order);
    cert.param("efr.R", R);
    cert.param("efr.N", declared_order);
    cert.note("edge_bound_uses", "declared N (sum of part sizes, isolated vertices included)");

    cert.measure("edges", h.size());
    cert.measure("vertices_in_edges", [&] {
        int c = 0;
        for (int v = 0; v < h.order(); ++v)
            c += h.degree(v) > 0;
        return c;
    }());

    // N^2 / R^(8 sqrt(log_R N)), evaluated in logs.
    if (N > 1 && R > 1) {
        double logR = std::log(static_cast<double>(R));
        double log_bound = 2 * std::log(N) - 8 * std::sqrt(std::log(N) / logR) * logR;
        cert.measure("edge_bound_log", log_bound);
        cert.measure("edge_bound", std::exp(log_bound));
        cert.check("i_edge_bound", static_cast<double>(h.size()) >= std::exp(log_bound));
    }
    else
        cert.check("i_edge_bound", Verdict::Unknown);

    auto lin = hypergraph_is_linear(h);
    cert.check("ii_linear", lin.pass, lin.witness(h));
    if (lin.pass) {
        auto tri = hypergraph_is_triangle_free(h);
        cert.check("iii_triangle_free", tri.pass, tri.witness(h));
    }
    else
        cert.check("iii_triangle_free", Verdict::Unknown, "requires a linear hypergraph");
    return cert;
}

Certificate efr_certificate(const EFRInstance & inst)
{
    Certificate cert = efr_certificate(inst.hypergraph, inst.R, inst.declared_order);
    cert.param("efr.d", inst.d);
    cert.param("efr.r", inst.r);
    cert.measure("directions", inst.directions.points.size());
    cert.measure("part_sizes", inst.part_sizes);
    cert.note("vertex_labels", "part i holds [(i r)]^d; id = offset_i + sum_j (y_j - 1) (i r)^j");
    cert.note("part_offsets", inst.part_offsets);

    long long expected = static_cast<long long>(inst.directions.points.size()) * ipow(inst.r, inst.d);
    cert.check("edge_count_identity", inst.hypergraph.size() == expected,
        nlohmann::json{{"expected", expected}, {"actual", inst.hypergraph.size()}});

    // Partite discipline: the i-th vertex of every edge lies in part i+1.
    std::optional<int> bad;
    for (int e = 0; e < inst.hypergraph.size() && ! bad; ++e) {
        auto & ev = inst.hypergraph.edge(e);
        for (int i = 0; i < inst.R; ++i)
            if (inst.vertex_label(ev[i]).first != i + 1) {
                bad = e;
                break;
            }
    }
    cert.check("partite", ! bad, bad ? nlohmann::json(inst.hypergraph.edge(*bad)) : nlohmann::json());

    if (inst.d >= 5) {
        double lagrange = std::pow(inst.r / std::sqrt(static_cast<double>(inst.d)), inst.d - 4);
        cert.measure("lagrange_direction_bound", lagrange);
        cert.check("lagrange_direction_bound", static_cast<double>(inst.directions.points.size()) >= lagrange);
    }
    return cert;
}

EFRParameters choose_efr_parameters(double N, int R)
{
    if (R < 2 || N < R)
        throw InputError("choose_efr_parameters needs R >= 2 and N >= R");
    EFRParameters p;
    p.d = static_cast<int>(std::floor(std::sqrt(std::log(N) / std::log(static_cast<double>(R)))));
    p.r = ipow(R, p.d);
    return p;
}

} // namespace erogers
