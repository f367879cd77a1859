#include <erogers/errors.hpp>
#include <erogers/graph.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace erogers {

Graph::Graph(int n) : rows_(n < 0 ? 0 : n, VertexSet(n < 0 ? 0 : n))
{
    if (n < 0)
        throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge> & edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u), {u, v});
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(order()) + ")");
}

int Graph::max_degree() const
{
    int d = 0;
    for (auto & r : rows_)
        d = std::max(d, r.count());
    return d;
}

int Graph::min_degree() const
{
    if (rows_.empty())
        return 0;
    int d = order();
    for (auto & r : rows_)
        d = std::min(d, r.count());
    return d;
}

bool Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v || rows_[u].contains(v))
        return false;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (! rows_[u].contains(v))
        return false;
    rows_[u].erase(v);
    rows_[v].erase(u);
    --edge_count_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v = rows_[u].next(u + 1); v != -1; v = rows_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    Graph c(order());
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if (! adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw InputError("vertex set universe does not match graph order");
    return induced_subgraph(g, s.members());
}

Graph induced_subgraph(const Graph & g, const std::vector<int> & vertices)
{
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("repeated vertex in induced_subgraph");
    for (int v : sorted)
        if (v < 0 || v >= g.order())
            throw InputError("vertex " + std::to_string(v) + " out of range", v);
    Graph h(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertices(const Graph & g, const std::vector<int> & removed)
{
    VertexSet keep = VertexSet::full(g.order());
    for (int v : removed)
        keep.erase(v);
    return induced_subgraph(g, keep);
}

bool is_independent(const Graph & g, const VertexSet & s)
{
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && g.neighbours(v).intersects(s))
            ok = false;
    });
    return ok;
}

std::optional<std::array<int, 3>> find_triangle(const Graph & g)
{
    for (int u = 0; u < g.order(); ++u) {
        auto & nu = g.neighbours(u);
        for (int v = nu.next(u + 1); v != -1; v = nu.next(v + 1)) {
            auto common = nu & g.neighbours(v);
            int w = common.next(v + 1);
            if (w != -1)
                return std::array<int, 3>{u, v, w};
        }
    }
    return std::nullopt;
}

namespace {
    bool extend_clique(const Graph & g, std::vector<int> & clique, VertexSet cand, int k)
    {
        if (static_cast<int>(clique.size()) == k)
            return true;
        if (static_cast<int>(clique.size()) + cand.count() < k)
            return false;
        for (int v = cand.first(); v != -1; v = cand.next(v + 1)) {
            cand.erase(v);
            clique.push_back(v);
            if (extend_clique(g, clique, cand & g.neighbours(v), k))
                return true;
            clique.pop_back();
            if (static_cast<int>(clique.size()) + cand.count() < k)
                return false;
        }
        return false;
    }

    void mark_component(const Graph & g, int start, std::vector<int> & comp, int label, int skip)
    {
        std::vector<int> stack{start};
        comp[start] = label;
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbours(u).for_each([&](int w) {
                if (w != skip && comp[w] < 0) {
                    comp[w] = label;
                    stack.push_back(w);
                }
            });
        }
    }

    int component_count(const Graph & g, int skip = -1)
    {
        std::vector<int> comp(g.order(), -1);
        int c = 0;
        for (int v = 0; v < g.order(); ++v)
            if (v != skip && comp[v] < 0)
                mark_component(g, v, comp, c++, skip);
        return c;
    }
}

std::optional<std::vector<int>> find_clique(const Graph & g, int k)
{
    std::vector<int> clique;
    if (k <= 0)
        return clique;
    if (extend_clique(g, clique, VertexSet::full(g.order()), k))
        return clique;
    return std::nullopt;
}

bool is_connected(const Graph & g) { return g.order() == 0 || component_count(g) == 1; }

bool is_acyclic(const Graph & g) { return g.size() == g.order() - component_count(g); }

bool is_biconnected(const Graph & g)
{
    if (g.order() < 3 || ! is_connected(g))
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (component_count(g, v) != 1)
            return false;
    return true;
}

bool is_complete(const Graph & g)
{
    long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

std::optional<std::vector<int>> bipartition(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool bad = false;
            g.neighbours(u).for_each([&](int w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                }
                else if (side[w] == side[u])
                    bad = true;
            });
            if (bad)
                return std::nullopt;
        }
    }
    return side;
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

namespace {
    std::vector<long long> parse_ints(const std::string & line, int lineno)
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
                throw ParseError(lineno, "expected an integer, got '" + tok + "'");
            }
            if (used != tok.size())
                throw ParseError(lineno, "expected an integer, got '" + tok + "'");
            out.push_back(x);
        }
        return out;
    }
}

Graph read_graph(std::istream & in)
{
    std::string line;
    int lineno = 1;
    if (! std::getline(in, line))
        throw ParseError(1, "missing header 'n m'");
    auto head = parse_ints(line, lineno);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0)
        throw ParseError(1, "header must be 'n m' with non-negative integers");
    Graph g(static_cast<int>(head[0]));
    for (long long i = 0; i < head[1]; ++i) {
        ++lineno;
        if (! std::getline(in, line))
            throw ParseError(lineno, "expected " + std::to_string(head[1]) + " edge lines");
        auto e = parse_ints(line, lineno);
        if (e.size() != 2)
            throw ParseError(lineno, "edge line must be 'u v'");
        if (e[0] < 0 || e[0] >= head[0] || e[1] < 0 || e[1] >= head[0])
            throw ParseError(lineno, "vertex out of range");
        if (e[0] == e[1])
            throw ParseError(lineno, "loop edge");
        if (! g.add_edge(static_cast<int>(e[0]), static_cast<int>(e[1])))
            throw ParseError(lineno, "duplicate edge");
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(lineno, "unexpected content after the last edge");
    }
    return g;
}

Graph load_graph(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void save_graph(const std::string & path, const Graph & g)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    write_graph(out, g);
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int> & parts)
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    Graph g(static_cast<int>(part_of.size()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph wagner()
{
    Graph g = cycle(8);
    for (int i = 0; i < 4; ++i)
        g.add_edge(i, i + 4);
    return g;
}

Graph blowup(const Graph & f, int part_size)
{
    Graph g(f.order() * part_size);
    for (auto [u, v] : f.edges())
        for (int i = 0; i < part_size; ++i)
            for (int j = 0; j < part_size; ++j)
                g.add_edge(u * part_size + i, v * part_size + j);
    return g;
}

std::optional<Graph> by_name(const std::string & name)
{
    static const std::regex single(R"(([KCP])(\d+))");
    static const std::regex bip(R"(K(\d+),(\d+))");
    std::smatch m;
    std::string lower = name;
    if (lower == "petersen")
        return petersen();
    if (lower == "wagner")
        return wagner();
    if (std::regex_match(name, m, bip))
        return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(name, m, single)) {
        int n = std::stoi(m[2]);
        if (m[1] == "K")
            return complete(n);
        if (m[1] == "P")
            return path(n);
        if (n >= 3)
            return cycle(n);
    }
    return std::nullopt;
}

} // namespace graphs

} // namespace erogers
