#include <erogers/errors.hpp>
#include <erogers/search.hpp>

#include <algorithm>
#include <set>

namespace erogers {

namespace {
    void check_length(int k)
    {
        if (k < 3 || k > 12)
            throw InputError("cycle length must lie in [3, 12]");
    }

    // Walks simple paths v0 = s0, s1, ..., s_{k-1} inside `allowed` and closes
    // them at v0, keeping only s1 < s_{k-1}.
    class CycleWalker {
    public:
        CycleWalker(const Graph & g, int k, const VertexSet & allowed) : g_(g), k_(k), allowed_(allowed), used_(g.order()) {}

        long long count(int v0)
        {
            start(v0);
            counting_ = true;
            walk();
            return total_;
        }

        void list(int v0, std::size_t cap, std::vector<std::vector<int>> & out)
        {
            start(v0);
            counting_ = false;
            out_ = &out;
            cap_ = cap;
            walk();
        }

    private:
        void start(int v0)
        {
            path_ = {v0};
            used_ = VertexSet(g_.order());
            used_.insert(v0);
            total_ = 0;
        }

        bool full() const { return cap_ && out_ && out_->size() >= cap_; }

        void walk()
        {
            int tail = path_.back();
            int len = static_cast<int>(path_.size());
            VertexSet cand = g_.neighbours(tail) & allowed_;
            cand.subtract(used_);
            if (len == k_ - 1) {
                // Last vertex closes the cycle: adjacent to v0 and above s1.
                cand &= g_.neighbours(path_[0]);
                int low = path_[1] + 1;
                if (counting_) {
                    for (int v = cand.next(low); v != -1; v = cand.next(v + 1))
                        ++total_;
                    return;
                }
                for (int v = cand.next(low); v != -1 && ! full(); v = cand.next(v + 1)) {
                    path_.push_back(v);
                    out_->push_back(path_);
                    path_.pop_back();
                }
                return;
            }
            for (int v = cand.first(); v != -1 && ! full(); v = cand.next(v + 1)) {
                path_.push_back(v);
                used_.insert(v);
                walk();
                used_.erase(v);
                path_.pop_back();
            }
        }

        const Graph & g_;
        int k_;
        const VertexSet & allowed_;
        VertexSet used_;
        std::vector<int> path_;
        long long total_ = 0;
        bool counting_ = true;
        std::vector<std::vector<int>> * out_ = nullptr;
        std::size_t cap_ = 0;
    };
}

long long count_k_cycles_through(const Graph & g, int v0, int k)
{
    check_length(k);
    if (v0 < 0 || v0 >= g.order())
        throw InputError("vertex out of range");
    VertexSet all = VertexSet::full(g.order());
    CycleWalker w(g, k, all);
    return w.count(v0);
}

std::vector<std::vector<int>> list_k_cycles_through(const Graph & g, int v0, int k, std::size_t cap)
{
    check_length(k);
    if (v0 < 0 || v0 >= g.order())
        throw InputError("vertex out of range");
    VertexSet all = VertexSet::full(g.order());
    CycleWalker w(g, k, all);
    std::vector<std::vector<int>> out;
    w.list(v0, cap, out);
    return out;
}

std::vector<std::vector<int>> list_k_cycles(const Graph & g, int k, std::size_t cap)
{
    check_length(k);
    std::vector<std::vector<int>> out;
    VertexSet above = VertexSet::full(g.order());
    for (int v0 = 0; v0 < g.order(); ++v0) {
        CycleWalker w(g, k, above);
        w.list(v0, cap, out);
        above.erase(v0);
        if (cap && out.size() >= cap)
            break;
    }
    return out;
}

Hypergraph cycle_hypergraph(const Graph & g, int k)
{
    std::set<HyperEdge> sets;
    for (auto & c : list_k_cycles(g, k)) {
        HyperEdge e = c;
        std::sort(e.begin(), e.end());
        sets.insert(std::move(e));
    }
    return Hypergraph(g.order(), std::vector<HyperEdge>(sets.begin(), sets.end()), k);
}

} // namespace erogers
