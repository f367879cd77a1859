#include <erogers/errors.hpp>
#include <erogers/hypergraph.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace erogers {

Hypergraph::Hypergraph(int n, std::vector<HyperEdge> edges, std::optional<int> uniformity) :
    n_(n), edges_(std::move(edges)), uniformity_(uniformity), incidence_(n < 0 ? 0 : n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    if (uniformity && *uniformity < 1)
        throw InputError("uniformity must be positive");
    std::set<HyperEdge> seen;
    for (int i = 0; i < size(); ++i) {
        auto & e = edges_[i];
        if (e.empty())
            throw InputError("edge " + std::to_string(i) + " is empty", i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= n)
                throw InputError("edge " + std::to_string(i) + " has vertex out of range", e);
            if (j && e[j - 1] >= e[j])
                throw InputError("edge " + std::to_string(i) + " is not strictly increasing", e);
        }
        if (uniformity && static_cast<int>(e.size()) != *uniformity)
            throw InputError("edge " + std::to_string(i) + " violates declared uniformity", e);
        if (! seen.insert(e).second)
            throw InputError("edge " + std::to_string(i) + " repeats an earlier edge", e);
        for (int v : e)
            incidence_[v].push_back(i);
    }
}

std::optional<int> Hypergraph::common_edge_size() const
{
    if (uniformity_)
        return uniformity_;
    if (edges_.empty())
        return std::nullopt;
    auto k = edges_.front().size();
    for (auto & e : edges_)
        if (e.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

int intersection_size(const HyperEdge & e, const HyperEdge & f)
{
    int c = 0;
    auto i = e.begin(), j = f.begin();
    while (i != e.end() && j != f.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

HyperEdge intersection(const HyperEdge & e, const HyperEdge & f)
{
    HyperEdge out;
    std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(out));
    return out;
}

nlohmann::json Audit::witness(const Hypergraph & h) const
{
    if (pass)
        return nullptr;
    nlohmann::json j;
    j["edge_indices"] = edges;
    nlohmann::json list = nlohmann::json::array();
    for (int e : edges)
        list.push_back(h.edge(e));
    j["edges"] = list;
    j["vertices"] = vertices;
    return j;
}

Audit hypergraph_is_linear(const Hypergraph & h)
{
    // Each vertex pair may be owned by at most one edge.
    std::unordered_map<std::uint64_t, int> owner;
    for (int i = 0; i < h.size(); ++i) {
        auto & e = h.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto key = (static_cast<std::uint64_t>(e[a]) << 32) | static_cast<std::uint32_t>(e[b]);
                auto [it, fresh] = owner.emplace(key, i);
                if (! fresh)
                    return Audit{false, {it->second, i}, intersection(h.edge(it->second), e)};
            }
    }
    return {};
}

Audit hypergraph_is_triangle_free(const Hypergraph & h)
{
    if (auto lin = hypergraph_is_linear(h); ! lin.pass)
        throw InputError("hypergraph is not linear: edges " + std::to_string(lin.edges[0]) + " and "
                + std::to_string(lin.edges[1]) + " share two vertices",
            lin.witness(h));

    // In a linear hypergraph, a triangle through e is a pair u != v of e with
    // edges f ∋ u, g ∋ v (both != e) such that f and g meet; the meeting
    // vertex cannot lie in e, so there is no common vertex.
    for (int e = 0; e < h.size(); ++e) {
        auto & ev = h.edge(e);
        for (std::size_t a = 0; a < ev.size(); ++a)
            for (std::size_t b = a + 1; b < ev.size(); ++b)
                for (int f : h.incident(ev[a])) {
                    if (f == e)
                        continue;
                    for (int g : h.incident(ev[b])) {
                        if (g == e || g == f)
                            continue;
                        auto w = intersection(h.edge(f), h.edge(g));
                        if (! w.empty()) {
                            std::vector<int> tri{e, f, g};
                            return Audit{false, tri, {ev[a], ev[b], w.front()}};
                        }
                    }
                }
    }
    return {};
}

namespace {
    struct CycleSearch {
        const Hypergraph & h;
        int length;
        const std::function<bool(const LooseCycle &)> & visit;
        std::vector<int> path;
        std::vector<int> joints; // joints[i] = path[i-1] ∩ path[i], joints[0] unused
        bool stopped = false;

        bool admissible(int f, int x, int & closing_vertex) const
        {
            int j = static_cast<int>(path.size()) - 1;
            bool closing = j + 1 == length - 1;
            auto & fe = h.edge(f);
            if (f <= path[0] || std::find(path.begin(), path.end(), f) != path.end())
                return false;
            if (closing && f < path[1])
                return false;
            auto last = intersection(fe, h.edge(path[j]));
            if (last.size() != 1 || last[0] != x)
                return false;
            for (int i = 0; i < j; ++i) {
                auto common = intersection(fe, h.edge(path[i]));
                if (closing && i == 0) {
                    if (common.size() != 1 || common[0] == x || common[0] == joints[1])
                        return false;
                    closing_vertex = common[0];
                }
                else if (! common.empty())
                    return false;
            }
            return true;
        }

        void extend()
        {
            if (stopped)
                return;
            int j = static_cast<int>(path.size()) - 1;
            for (int x : h.edge(path[j])) {
                if (j > 0 && x == joints[j])
                    continue;
                for (int f : h.incident(x)) {
                    int closing_vertex = -1;
                    if (! admissible(f, x, closing_vertex))
                        continue;
                    path.push_back(f);
                    joints.push_back(x);
                    if (static_cast<int>(path.size()) == length) {
                        LooseCycle c;
                        c.edges = path;
                        c.vertices.push_back(closing_vertex);
                        c.vertices.insert(c.vertices.end(), joints.begin() + 1, joints.end());
                        if (! visit(c))
                            stopped = true;
                    }
                    else
                        extend();
                    path.pop_back();
                    joints.pop_back();
                    if (stopped)
                        return;
                }
            }
        }
    };
}

void for_each_loose_cycle(const Hypergraph & h, int length, const std::function<bool(const LooseCycle &)> & visit)
{
    if (length < 2)
        throw InputError("loose cycles have length at least 2");
    if (length == 2) {
        for (int e = 0; e < h.size(); ++e)
            for (int f = e + 1; f < h.size(); ++f) {
                auto common = intersection(h.edge(e), h.edge(f));
                if (common.size() >= 2 && ! visit(LooseCycle{{e, f}, common}))
                    return;
            }
        return;
    }
    CycleSearch search{h, length, visit, {}, {}};
    for (int e = 0; e < h.size() && ! search.stopped; ++e) {
        search.path = {e};
        search.joints = {-1};
        search.extend();
    }
}

Audit hypergraph_girth_at_least(const Hypergraph & h, int g)
{
    if (g < 2)
        throw InputError("girth bound must be at least 2");
    for (int len = 2; len < g; ++len) {
        std::optional<LooseCycle> found;
        for_each_loose_cycle(h, len, [&](const LooseCycle & c) {
            found = c;
            return false;
        });
        if (found)
            return Audit{false, found->edges, found->vertices};
    }
    return {};
}

void write_hypergraph(std::ostream & out, const Hypergraph & h)
{
    out << h.order() << ' ' << h.size();
    if (h.uniformity())
        out << ' ' << *h.uniformity();
    out << '\n';
    for (auto & e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

namespace {
    std::vector<long long> ints_of(const std::string & line, int lineno)
    {
        std::istringstream ss(line);
        std::vector<long long> out;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            long long x = 0;
            try {
                x = std::stoll(tok, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size() || tok.empty())
                throw ParseError(lineno, "expected an integer, got '" + tok + "'");
            out.push_back(x);
        }
        return out;
    }
}

Hypergraph read_hypergraph(std::istream & in)
{
    std::string line;
    if (! std::getline(in, line))
        throw ParseError(1, "missing header 'n m [r]'");
    auto head = ints_of(line, 1);
    if (head.size() < 2 || head.size() > 3 || head[0] < 0 || head[1] < 0 || (head.size() == 3 && head[2] < 1))
        throw ParseError(1, "header must be 'n m [r]'");
    std::optional<int> r;
    if (head.size() == 3)
        r = static_cast<int>(head[2]);
    std::vector<HyperEdge> edges;
    std::set<HyperEdge> seen;
    int lineno = 1;
    for (long long i = 0; i < head[1]; ++i) {
        ++lineno;
        if (! std::getline(in, line))
            throw ParseError(lineno, "expected " + std::to_string(head[1]) + " edge lines");
        auto v = ints_of(line, lineno);
        if (v.empty())
            throw ParseError(lineno, "empty edge");
        HyperEdge e;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < 0 || v[j] >= head[0])
                throw ParseError(lineno, "vertex out of range");
            if (j && v[j - 1] >= v[j])
                throw ParseError(lineno, "edge vertices must be strictly increasing");
            e.push_back(static_cast<int>(v[j]));
        }
        if (r && static_cast<int>(e.size()) != *r)
            throw ParseError(lineno, "edge size differs from declared uniformity");
        if (! seen.insert(e).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(std::move(e));
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(lineno, "unexpected content after the last edge");
    }
    return Hypergraph(static_cast<int>(head[0]), std::move(edges), r);
}

Hypergraph load_hypergraph(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return read_hypergraph(in);
}

void save_hypergraph(const std::string & path, const Hypergraph & h)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    write_hypergraph(out, h);
}

} // namespace erogers
