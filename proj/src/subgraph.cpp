#include <erogers/errors.hpp>
#include <erogers/subgraph.hpp>

#include <algorithm>
#include <numeric>

namespace erogers {

const char * to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Unknown: return "unknown";
    }
    return "unknown";
}

bool is_embedding(const Graph & host, const Graph & pattern, const std::vector<int> & map)
{
    if (static_cast<int>(map.size()) != pattern.order())
        return false;
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int v : map)
        if (v < 0 || v >= host.order())
            return false;
    for (auto [a, b] : pattern.edges())
        if (! host.adjacent(map[a], map[b]))
            return false;
    return true;
}

namespace {
    class Searcher {
    public:
        Searcher(const Graph & host, const Graph & pattern, const VertexSet & allowed, BudgetMeter & meter) :
            host_(host), pattern_(pattern), allowed_(allowed), meter_(meter), map_(pattern.order(), -1),
            used_(host.order())
        {
            for (int v = 0; v < host.order(); ++v)
                host_degree_.push_back(host.neighbours(v).intersection_count(allowed));
            host_by_degree_.resize(host.order());
            std::iota(host_by_degree_.begin(), host_by_degree_.end(), 0);
            std::stable_sort(host_by_degree_.begin(), host_by_degree_.end(),
                [&](int a, int b) { return host_degree_[a] < host_degree_[b]; });
        }

        // Orders pattern vertices: `first` leads, then the vertex with most
        // already-ordered neighbours, ties by descending degree.
        void build_order(int first)
        {
            int k = pattern_.order();
            order_.clear();
            back_.assign(k, {});
            std::vector<bool> placed(k, false);
            std::vector<int> links(k, 0);
            for (int step = 0; step < k; ++step) {
                int pick = -1;
                if (step == 0 && first >= 0)
                    pick = first;
                else
                    for (int p = 0; p < k; ++p) {
                        if (placed[p])
                            continue;
                        if (pick < 0 || links[p] > links[pick]
                            || (links[p] == links[pick] && pattern_.degree(p) > pattern_.degree(pick)))
                            pick = p;
                    }
                placed[pick] = true;
                order_.push_back(pick);
                pattern_.neighbours(pick).for_each([&](int q) {
                    if (placed[q])
                        back_[step].push_back(q);
                    ++links[q];
                });
            }
        }

        SearchStatus run(int fixed_host_vertex)
        {
            fixed_ = fixed_host_vertex;
            return extend(0) ? SearchStatus::Found : meter_.exhausted() ? SearchStatus::Unknown : SearchStatus::Absent;
        }

        const std::vector<int> & map() const { return map_; }

    private:
        bool try_vertex(int depth, int p, int h)
        {
            if (used_.contains(h) || host_degree_[h] < pattern_.degree(p))
                return false;
            map_[p] = h;
            used_.insert(h);
            bool ok = extend(depth + 1);
            if (! ok) {
                used_.erase(h);
                map_[p] = -1;
            }
            return ok;
        }

        bool extend(int depth)
        {
            if (depth == pattern_.order())
                return true;
            if (! meter_.tick())
                return false;
            int p = order_[depth];
            if (depth == 0 && fixed_ >= 0)
                return allowed_.contains(fixed_) && try_vertex(depth, p, fixed_);
            if (back_[depth].empty()) {
                for (int h : host_by_degree_) {
                    if (allowed_.contains(h) && try_vertex(depth, p, h))
                        return true;
                    if (meter_.exhausted())
                        return false;
                }
                return false;
            }
            VertexSet cand = allowed_;
            for (int q : back_[depth])
                cand &= host_.neighbours(map_[q]);
            cand.subtract(used_);
            for (int h = cand.first(); h != -1; h = cand.next(h + 1)) {
                if (try_vertex(depth, p, h))
                    return true;
                if (meter_.exhausted())
                    return false;
            }
            return false;
        }

        const Graph & host_;
        const Graph & pattern_;
        const VertexSet & allowed_;
        BudgetMeter & meter_;
        std::vector<int> map_;
        VertexSet used_;
        std::vector<int> host_degree_;
        std::vector<int> host_by_degree_;
        std::vector<int> order_;
        std::vector<std::vector<int>> back_;
        int fixed_ = -1;
    };
}

SubgraphResult contains_subgraph(const Graph & host, const Graph & pattern, const Budget & budget,
    const SubgraphOptions & options)
{
    if (pattern.order() < 1)
        throw InputError("pattern must have at least one vertex");
    VertexSet allowed = options.within ? *options.within : VertexSet::full(host.order());
    if (allowed.universe() != host.order())
        throw InputError("restriction set does not match host order");
    if (options.anchor >= host.order())
        throw InputError("anchor vertex out of range");

    SubgraphResult result;
    BudgetMeter meter(budget);
    if (pattern.order() > allowed.count() || (options.anchor >= 0 && ! allowed.contains(options.anchor))) {
        result.status = SearchStatus::Absent;
        return result;
    }

    Searcher searcher(host, pattern, allowed, meter);
    std::vector<int> leaders;
    if (options.anchor >= 0) {
        // Any pattern vertex may sit on the anchor.
        leaders.resize(pattern.order());
        std::iota(leaders.begin(), leaders.end(), 0);
    }
    else {
        int top = 0;
        for (int p = 1; p < pattern.order(); ++p)
            if (pattern.degree(p) > pattern.degree(top))
                top = p;
        leaders.push_back(top);
    }

    bool unknown = false;
    for (int lead : leaders) {
        searcher.build_order(lead);
        auto s = searcher.run(options.anchor);
        if (s == SearchStatus::Found) {
            result.status = s;
            result.embedding = searcher.map();
            result.nodes = meter.nodes();
            if (! is_embedding(host, pattern, result.embedding))
                throw ValidationFault("subgraph search produced an invalid embedding");
            return result;
        }
        if (s == SearchStatus::Unknown) {
            unknown = true;
            break;
        }
    }
    result.status = unknown ? SearchStatus::Unknown : SearchStatus::Absent;
    result.nodes = meter.nodes();
    return result;
}

} // namespace erogers
