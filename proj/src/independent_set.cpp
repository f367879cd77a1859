#include <erogers/errors.hpp>
#include <erogers/search.hpp>
#include <erogers/subgraph.hpp>

#include <algorithm>

namespace erogers {

const char * to_string(Optimality o) { return o == Optimality::Optimal ? "optimal" : "lower-bound"; }

VertexSet greedy_independent_set(const Graph & g)
{
    int n = g.order();
    VertexSet alive = VertexSet::full(n), chosen(n);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    while (! alive.empty()) {
        int pick = -1;
        alive.for_each([&](int v) {
            if (pick < 0 || deg[v] < deg[pick])
                pick = v;
        });
        chosen.insert(pick);
        VertexSet removed = g.neighbours(pick) & alive;
        removed.insert(pick);
        alive.subtract(removed);
        removed.for_each([&](int u) { (g.neighbours(u) & alive).for_each([&](int w) { --deg[w]; }); });
    }
    return chosen;
}

namespace {
    // Maximum clique in the graph given by `adj`.
    class CliqueSearch {
    public:
        CliqueSearch(const std::vector<VertexSet> & adj, BudgetMeter & meter, std::vector<int> incumbent) :
            adj_(adj), meter_(meter), best_(std::move(incumbent))
        {
        }

        void run(const VertexSet & all) { expand(all); }
        const std::vector<int> & best() const { return best_; }

    private:
        void expand(VertexSet p)
        {
            if (! meter_.tick())
                return;
            std::vector<int> order, bound;
            VertexSet uncoloured = p;
            int colour = 0;
            while (! uncoloured.empty()) {
                ++colour;
                VertexSet q = uncoloured;
                for (int v = q.first(); v != -1; v = q.next(v + 1)) {
                    q.subtract(adj_[v]);
                    uncoloured.erase(v);
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
            for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                if (current_.size() + bound[i] <= best_.size())
                    return;
                int v = order[i];
                current_.push_back(v);
                VertexSet next = p & adj_[v];
                if (next.empty()) {
                    if (current_.size() > best_.size())
                        best_ = current_;
                }
                else
                    expand(std::move(next));
                current_.pop_back();
                p.erase(v);
                if (meter_.exhausted())
                    return;
            }
        }

        const std::vector<VertexSet> & adj_;
        BudgetMeter & meter_;
        std::vector<int> best_, current_;
    };
}

SetResult max_independent_set(const Graph & g, const Budget & budget)
{
    int n = g.order();
    SetResult result;
    result.set = greedy_independent_set(g);
    if (n == 0) {
        result.status = Optimality::Optimal;
        return result;
    }
    std::vector<VertexSet> co(n, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        co[v] = VertexSet::full(n);
        co[v].subtract(g.neighbours(v));
        co[v].erase(v);
    }
    BudgetMeter meter(budget);
    CliqueSearch search(co, meter, result.set.members());
    search.run(VertexSet::full(n));
    result.set = VertexSet::from_members(n, search.best());
    result.status = meter.exhausted() ? Optimality::LowerBound : Optimality::Optimal;
    result.nodes = meter.nodes();
    if (! is_independent(g, result.set))
        throw ValidationFault("independent set search returned a dependent set");
    return result;
}

bool is_f_free_set(const Graph & g, const Graph & f, const VertexSet & s)
{
    auto r = contains_subgraph(g, f, Budget::unlimited(), {&s, -1});
    return r.absent();
}

namespace {
    class FFreeSearch {
    public:
        FFreeSearch(const Graph & g, const Graph & f, BudgetMeter & meter, VertexSet incumbent) :
            g_(g), f_(f), meter_(meter), best_(std::move(incumbent)), current_(g.order())
        {
            order_.resize(g.order());
            for (int v = 0; v < g.order(); ++v)
                order_[v] = v;
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
        }

        void run() { branch(0, 0); }
        const VertexSet & best() const { return best_; }

    private:
        bool addable(int v)
        {
            current_.insert(v);
            auto r = contains_subgraph(g_, f_, Budget::unlimited(), {&current_, v});
            current_.erase(v);
            return r.absent();
        }

        void branch(std::size_t i, int size)
        {
            if (! meter_.tick())
                return;
            if (size + static_cast<int>(order_.size() - i) <= best_.count())
                return;
            if (i == order_.size()) {
                best_ = current_;
                return;
            }
            int v = order_[i];
            if (addable(v)) {
                current_.insert(v);
                branch(i + 1, size + 1);
                current_.erase(v);
            }
            if (! meter_.exhausted())
                branch(i + 1, size);
        }

        const Graph & g_;
        const Graph & f_;
        BudgetMeter & meter_;
        VertexSet best_, current_;
        std::vector<int> order_;
    };
}

SetResult max_f_free_subset(const Graph & g, const Graph & f, const Budget & budget, const FFreeOptions & options)
{
    if (f.size() < 1)
        throw InputError("pattern F must have at least one edge");
    if (options.independent_set_shortcut && f.order() == 2)
        return max_independent_set(g, budget);

    // Independent sets are F-free; extend the greedy one to a maximal F-free set.
    VertexSet start = greedy_independent_set(g);
    for (int v = 0; v < g.order(); ++v) {
        if (start.contains(v))
            continue;
        start.insert(v);
        if (contains_subgraph(g, f, Budget::unlimited(), {&start, v}).found())
            start.erase(v);
    }

    BudgetMeter meter(budget);
    FFreeSearch search(g, f, meter, start);
    search.run();
    SetResult result;
    result.set = search.best();
    result.status = meter.exhausted() ? Optimality::LowerBound : Optimality::Optimal;
    result.nodes = meter.nodes();
    if (! is_f_free_set(g, f, result.set))
        throw ValidationFault("F-free search returned a set containing F");
    return result;
}

} // namespace erogers
