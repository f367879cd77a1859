#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

#include <cmath>

namespace erogers {

namespace {

struct Candidate {
    std::string source;
    VertexSet set;
};

// Largest set wins; ties go to the lexicographically least one.
const Candidate & pick(const std::vector<Candidate> & cands)
{
    const Candidate * best = &cands.front();
    for (auto & c : cands) {
        int a = c.set.count(), b = best->set.count();
        if (a > b || (a == b && c.set.lex_less(best->set)))
            best = &c;
    }
    return *best;
}

VertexSet lift(const VertexSet & local, const std::vector<int> & members, int universe)
{
    VertexSet out(universe);
    local.for_each([&](int i) { out.insert(members[i]); });
    return out;
}

int max_degree_vertex(const Graph & g)
{
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

void require_ck_free(const Graph & g, int k, const VertexSet & s)
{
    if (s.count() < k)
        return;
    if (! contains_subgraph(g, graphs::cycle(k), Budget::unlimited(), {&s, -1}).absent())
        throw ValidationFault("C_" + std::to_string(k) + "-free pipeline produced a set containing C_"
            + std::to_string(k));
}

long long turan_floor(const Graph & g)
{
    long long n = g.order();
    long long d = g.max_degree();
    return n == 0 ? 0 : (n + d) / (d + 1);
}

// Bound 2: dense pair through v0, dependent random choice, then either Z or
// the common neighbourhood of an edge inside Z.
std::optional<Candidate> dense_pair_candidate(const Graph & g, int v0, int k, const SeededRng & rng,
    const CkFreeOptions & options, nlohmann::json & log)
{
    auto pair = ckprop_dense_pair(g, v0, k);
    log["dense_pair"] = pair.to_json();
    VertexSet x = pair.x, y = pair.y;
    VertexSet x_only = x;
    x_only.subtract(y);
    if (! x_only.empty()) {
        x = x_only;
    } else {
        y.subtract(x);
    }
    if (x.empty() || y.empty() || count_cross_edges(g, x, y) == 0) {
        log["drc"] = "no disjoint pair with a cross edge";
        return std::nullopt;
    }
    auto drc = dependent_random_choice(g, x, y, 3, rng.substream("drc"), options.drc_retries);
    log["drc"] = drc.to_json();
    if (drc.z.empty())
        return std::nullopt;
    if (is_independent(g, drc.z))
        return Candidate{"drc-z", drc.z};
    auto members = drc.z.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j])) {
                auto common = g.neighbours(members[i]) & g.neighbours(members[j]);
                if (! is_independent(g, common))
                    throw ValidationFault("common neighbourhood of an edge is not independent in a K4-free graph");
                log["drc_edge"] = {members[i], members[j]};
                return Candidate{"drc-common-neighbourhood", common};
            }
    return std::nullopt;
}

} // namespace

double epsilon_k(int k)
{
    return 1.0 / (100.0 * (k - 1));
}

double alpha_k(int k, int s)
{
    if (s < 4)
        throw InputError("alpha_k is defined for s >= 4");
    double a = 1.0 / 3.0 + epsilon_k(k);
    for (int i = 5; i <= s; ++i)
        a = 1.0 - 1.0 / (1.0 + a);
    return a;
}

CkFreeResult ckfree_subset(const Graph & g, int k, const SeededRng & rng, const CkFreeOptions & options)
{
    if (k < 3 || k > 12)
        throw InputError("cycle length k must lie in [3, 12]");
    if (auto k4 = find_clique(g, 4))
        throw InputError("graph contains K4", {{"clique", *k4}});

    CkFreeResult out;
    auto & cert = out.certificate;
    const int n = g.order();
    const int d = g.max_degree();
    const double eps = epsilon_k(k);
    cert.param("k", k);
    cert.param("n", n);
    cert.param("max_degree", d);
    cert.param("epsilon_k", eps);
    cert.seed(rng.label(), rng.seed());
    cert.check("k4_free", true);

    double low = std::pow(static_cast<double>(n), 2.0 / 3.0 - eps);
    double high = std::pow(static_cast<double>(n), 2.0 / 3.0 + 2.0 * eps);
    cert.measure("degree_low_threshold", low);
    cert.measure("degree_high_threshold", high);

    std::string branch = d <= low ? "turan" : d >= high ? "neighbourhood" : "middle";
    if (options.force_branch) {
        branch = *options.force_branch;
        if (branch != "turan" && branch != "neighbourhood" && branch != "middle")
            throw InputError("unknown branch " + branch);
        cert.note("forced_branch", branch);
    }

    std::vector<Candidate> cands;
    if (n > 0 && contains_subgraph(g, graphs::cycle(k), options.budget).absent())
        cands.push_back({"whole-graph", VertexSet::full(n)});
    auto mis = max_independent_set(g, options.budget);
    cands.push_back({"turan", mis.set});
    nlohmann::json log = nlohmann::json::object();
    log["turan"] = {{"size", mis.size()}, {"status", to_string(mis.status)}};

    if (branch == "neighbourhood" && n > 0) {
        int v = max_degree_vertex(g);
        auto members = g.neighbours(v).members();
        auto local = max_independent_set(induced_subgraph(g, members), options.budget);
        cands.push_back({"neighbourhood", lift(local.set, members, n)});
        log["neighbourhood"] = {{"vertex", v}, {"size", local.size()}, {"status", to_string(local.status)}};
    } else if (branch == "middle" && n > 0) {
        long long delta_cycles = 0, total = 0;
        int v0 = 0;
        for (int v = 0; v < n; ++v) {
            long long c = count_k_cycles_through(g, v, k);
            total += c;
            if (c > delta_cycles) {
                delta_cycles = c;
                v0 = v;
            }
        }
        total /= k;
        double delta = d > 0 ? static_cast<double>(delta_cycles) / std::pow(static_cast<double>(d), k - 1) : 0.0;
        double cutoff = std::pow(static_cast<double>(n), -1.0 / 25.0);
        log["cycles"] = {{"total", total}, {"max_through_vertex", delta_cycles}, {"vertex", v0}};
        cert.measure("delta", delta);
        cert.measure("delta_cutoff", cutoff);

        if (total <= options.max_cycles) {
            auto sp = spencer_independent_set(cycle_hypergraph(g, k), rng.substream("spencer"), options.spencer_trials);
            cands.push_back({"spencer", sp.set});
            log["spencer"] = {{"size", sp.set.count()}, {"bound", sp.bound}, {"average_degree", sp.average_degree}};
        } else {
            log["spencer"] = "skipped: too many cycles";
        }

        bool attempt = delta_cycles > 0 && d >= 2 && (delta >= cutoff || ! options.respect_delta_cutoff);
        if (attempt) {
            if (auto c = dense_pair_candidate(g, v0, k, rng, options, log))
                cands.push_back(*c);
        } else {
            log["dense_pair"] = delta_cycles == 0 ? "skipped: no k-cycles" : "skipped: delta below cutoff";
        }
    }

    const auto & best = pick(cands);
    out.set = best.set;
    out.branch = branch;
    out.source = best.source;
    require_ck_free(g, k, out.set);
    if (out.set.count() < turan_floor(g))
        throw ValidationFault("C_k-free set below the Turán floor");

    nlohmann::json sizes = nlohmann::json::object();
    for (auto & c : cands)
        sizes[c.source] = c.set.count();
    cert.measure("branch", branch);
    cert.measure("source", best.source);
    cert.measure("candidate_sizes", sizes);
    cert.measure("size", out.set.count());
    cert.measure("turan_floor", turan_floor(g));
    cert.measure("log", log);
    cert.measure("set", out.set.members());
    cert.check("ck_free", true);
    cert.check("turan_floor", true);
    return out;
}

KsFreeResult ksfree_recursion(const Graph & g, int s, int k, const SeededRng & rng, const CkFreeOptions & options)
{
    if (s < 4)
        throw InputError("ksfree_recursion needs s >= 4");
    if (auto ks = find_clique(g, s))
        throw InputError("graph contains K" + std::to_string(s), {{"clique", *ks}});

    KsFreeResult out;
    const int n = g.order();
    if (s == 4 || ! find_clique(g, 4)) {
        auto base = ckfree_subset(g, k, rng.substream("ckfree", static_cast<std::uint64_t>(s)), options);
        out.set = base.set;
        out.trace.push_back({{"s", s}, {"action", "ckfree"}, {"branch", base.branch}, {"size", base.set.count()}});
        out.certificate.attach("ckfree", base.certificate);
    } else {
        VertexSet turan = greedy_independent_set(g);
        int v = max_degree_vertex(g);
        auto members = g.neighbours(v).members();
        auto inner = ksfree_recursion(induced_subgraph(g, members), s - 1, k,
            rng.substream("level", static_cast<std::uint64_t>(s)), options);
        VertexSet lifted = lift(inner.set, members, n);
        bool descend = lifted.count() > turan.count();
        out.set = descend ? lifted : turan;
        out.trace.push_back({{"s", s}, {"action", descend ? "descend" : "turan"}, {"vertex", v},
            {"neighbourhood_size", members.size()}, {"turan_size", turan.count()},
            {"descended_size", lifted.count()}});
        for (auto & step : inner.trace)
            out.trace.push_back(step);
        out.certificate.attach("inner", inner.certificate);
    }
    require_ck_free(g, k, out.set);

    auto & cert = out.certificate;
    cert.param("s", s);
    cert.param("k", k);
    cert.param("n", n);
    cert.seed(rng.label(), rng.seed());
    cert.check("ks_free", true);
    cert.check("ck_free", true);
    cert.measure("alpha_k", alpha_k(k, s));
    cert.measure("size", out.set.count());
    cert.measure("trace", out.trace);
    return out;
}

} // namespace erogers
