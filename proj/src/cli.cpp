#include <erogers/cli.hpp>
#include <erogers/errors.hpp>
#include <erogers/pipelines.hpp>
#include <erogers/subgraph.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace erogers {

namespace {

constexpr const char * artifact_version = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string & path, const std::string & body)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw UsageError("cannot write " + path);
    out << body;
}

// "0-3,7" -> {0,1,2,3,7}
std::vector<int> parse_vertex_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            auto dash = item.find('-', 1);
            if (dash == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
                for (int v = a; v <= b; ++v)
                    out.push_back(v);
            }
        } catch (const std::logic_error &) {
            throw UsageError("bad vertex list entry '" + item + "'");
        }
    }
    return out;
}

VertexSet to_set(const std::vector<int> & members, int n)
{
    for (int v : members)
        if (v < 0 || v >= n)
            throw UsageError("vertex " + std::to_string(v) + " out of range");
    return VertexSet::from_members(n, members);
}

class Runner {
public:
    Runner(std::ostream & out, std::ostream & err) : out_(out), err_(err) { build(); }

    int run(const std::vector<std::string> & args)
    {
        argv_ = args;
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app_.parse(reversed);
        } catch (const CLI::CallForHelp &) {
            out_ << app_.help();
            return exit_pass;
        } catch (const CLI::CallForAllHelp &) {
            out_ << app_.help("", CLI::AppFormatMode::All);
            return exit_pass;
        } catch (const CLI::ParseError & e) {
            err_ << "usage error: " << e.what() << "\n";
            return exit_usage;
        }

        CLI::App * verb = nullptr;
        for (auto * sub : app_.get_subcommands())
            verb = sub;
        if (! verb)
            return exit_usage;
        CLI::App * leaf = verb;
        for (auto * sub : verb->get_subcommands())
            leaf = sub;
        command_ = leaf == verb ? verb->get_name() : verb->get_name() + " " + leaf->get_name();
        leaf_ = leaf;

        try {
            if (randomized_.count(command_) && ! leaf->get_option("--seed")->count()) {
                const char * req = std::getenv("REQUIRE_SEED");
                if (req && std::string(req) == "1")
                    throw UsageError("REQUIRE_SEED=1: '" + command_ + "' needs an explicit --seed");
            }
            start_ = std::chrono::steady_clock::now();
            return handlers_.at(command_)();
        } catch (const UsageError & e) {
            err_ << "usage error: " << e.what() << "\n";
            return exit_usage;
        } catch (const ParseError & e) {
            err_ << "usage error: malformed input, " << e.what() << "\n";
            return exit_usage;
        } catch (const InputError & e) {
            err_ << "precondition failed: " << e.what() << "\n";
            if (! e.witness().is_null())
                err_ << "witness: " << e.witness().dump() << "\n";
            return exit_precondition;
        } catch (const ValidationFault & e) {
            err_ << "validation fault: " << e.what() << "\n";
            return exit_fail;
        } catch (const std::runtime_error & e) {
            err_ << "usage error: " << e.what() << "\n";
            return exit_usage;
        }
    }

private:
    // ---- option plumbing -------------------------------------------------

    CLI::App * leaf(CLI::App * parent, const std::string & name, const std::string & help,
        std::function<int()> handler, bool randomized = false)
    {
        auto * sub = parent->add_subcommand(name, help);
        std::string key = parent->get_name() + " " + name;
        handlers_[key] = std::move(handler);
        if (randomized) {
            randomized_.insert(key);
            sub->add_option("--seed", seed_, "RNG seed")->capture_default_str();
        }
        sub->add_option("--threads", threads_, "worker threads (results do not depend on it)");
        sub->add_option("--budget-ms", budget_ms_, "wall-clock budget for searches, 0 = none");
        sub->add_option("--budget-nodes", budget_nodes_, "node budget for searches, 0 = none");
        return sub;
    }

    Budget budget() const
    {
        Budget b;
        b.max_nodes = budget_nodes_;
        b.max_time = std::chrono::milliseconds(budget_ms_);
        return b;
    }

    long runtime_ms() const
    {
        return static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
    }

    Graph pattern(const std::string & spec)
    {
        if (spec.empty())
            throw UsageError("missing graph argument");
        if (std::filesystem::exists(spec)) {
            inputs_.push_back(spec);
            return load_graph(spec);
        }
        if (auto g = graphs::by_name(spec))
            return *g;
        throw UsageError("cannot open " + spec);
    }

    Graph graph_file(const std::string & path)
    {
        inputs_.push_back(path);
        if (! std::filesystem::exists(path))
            throw UsageError("cannot open " + path);
        return load_graph(path);
    }

    Hypergraph hypergraph_file(const std::string & path)
    {
        inputs_.push_back(path);
        if (! std::filesystem::exists(path))
            throw UsageError("cannot open " + path);
        return load_hypergraph(path);
    }

    nlohmann::json parameters() const
    {
        nlohmann::json p = nlohmann::json::object();
        for (const auto * opt : leaf_->get_options()) {
            if (! opt->count() || opt->get_name() == "--help" || opt->get_name() == "-h,--help")
                continue;
            auto res = opt->results();
            std::string name = opt->get_name();
            p[name] = res.size() == 1 ? nlohmann::json(res.front()) : nlohmann::json(res);
        }
        return p;
    }

    void emit_instance(const std::string & path, const std::string & body)
    {
        write_file(path, body);
        outputs_.push_back(path);
    }

    // Writes <out>.cert.json and <out>.manifest.json when --out is set.
    void emit(const Certificate & cert)
    {
        if (out_path_.empty())
            return;
        emit_instance(out_path_ + ".cert.json", cert.dump());
        nlohmann::json manifest = {{"command", command_}, {"argv", argv_}, {"parameters", parameters()},
            {"seed", seed_}, {"inputs", inputs_}, {"outputs", outputs_}, {"wall_clock_ms", runtime_ms()},
            {"artifact_version", artifact_version}};
        write_file(out_path_ + ".manifest.json", manifest.dump(2) + "\n");
    }

    void require_out()
    {
        if (out_path_.empty())
            throw UsageError("--out is required");
    }

    static int exit_for(const Certificate & cert)
    {
        auto checks = cert.checks();
        for (auto & [name, c] : checks.items())
            if (c.at("verdict") == "fail")
                return exit_fail;
        return exit_pass;
    }

    void summary(const std::vector<std::pair<std::string, std::string>> & fields)
    {
        out_ << "command=" << leaf_->get_name();
        for (auto & [k, v] : fields)
            out_ << " " << k << "=" << v;
        out_ << " runtime_ms=" << runtime_ms() << "\n";
    }

    int verdict_line(bool pass, const nlohmann::json & witness)
    {
        if (pass) {
            out_ << "pass\n";
            return exit_pass;
        }
        out_ << "fail " << witness.dump() << "\n";
        return exit_fail;
    }

    static std::string graph_text(const Graph & g)
    {
        std::ostringstream ss;
        write_graph(ss, g);
        return ss.str();
    }

    static std::string hypergraph_text(const Hypergraph & h)
    {
        std::ostringstream ss;
        write_hypergraph(ss, h);
        return ss.str();
    }

    // ---- command table ---------------------------------------------------

    void build()
    {
        app_.name("erogers");
        app_.description("Constructions and certificates for generalised Erdős–Rogers functions");
        app_.require_subcommand(1);

        auto * construct = app_.add_subcommand("construct", "build an instance and its certificate");
        construct->require_subcommand(1);
        auto * verify = app_.add_subcommand("verify", "audit an instance file");
        verify->require_subcommand(1);
        auto * search = app_.add_subcommand("search", "run a search engine");
        search->require_subcommand(1);
        auto * pipeline = app_.add_subcommand("pipeline", "run an end-to-end pipeline");
        pipeline->require_subcommand(1);
        auto * oracle = app_.add_subcommand("oracle", "exact tiny-n oracles");
        oracle->require_subcommand(1);
        auto * replay = app_.add_subcommand("replay", "re-run a recorded manifest");
        handlers_["replay"] = [this] { return cmd_replay(); };
        replay->add_option("manifest", manifest_path_, "manifest JSON")->required();
        replay->add_option("--out", out_path_, "write to a new prefix and compare with the recorded outputs");

        CLI::App * c;
        c = leaf(construct, "efr", "EFR linear triangle-free hypergraph", [this] { return cmd_efr(); });
        c->add_option("--d", d_)->required();
        c->add_option("--r", r_)->required();
        c->add_option("--R", big_r_)->required();
        c->add_option("--out", out_path_)->required();

        c = leaf(construct, "theorem1", "triangle-free graph from EFR + random F-blowups", [this] { return cmd_theorem1(); }, true);
        c->add_option("--d", d_)->required();
        c->add_option("--r", r_)->required();
        c->add_option("--R", big_r_)->required();
        c->add_option("--f,--pattern-f", f_, "pattern F (file or name)")->required();
        c->add_option("--out", out_path_)->required();
        c->add_flag("--no-measure", no_measure_, "skip the F-free subset measurement");

        c = leaf(construct, "theorem4-part1", "G-free graph from a high-girth bipartite square", [this] { return cmd_t4p1(); }, true);
        c->add_option("--g,--pattern-g", g_)->required();
        c->add_option("--f,--pattern-f", f_)->required();
        c->add_option("--n", n_)->required();
        c->add_option("--d", d_)->required();
        c->add_option("--girth", girth_, "girth target")->required();
        c->add_option("--out", out_path_)->required();
        c->add_flag("--no-measure", no_measure_);

        c = leaf(construct, "theorem4-part2", "G-free F from G* placements in a high-girth hypergraph", [this] { return cmd_t4p2(); }, true);
        c->add_option("--g,--pattern-g", g_)->required();
        c->add_option("--t", t_, "vertices of F*");
        c->add_option("--fstar", fstar_path_, "use this F* instead of sampling");
        c->add_option("--pair", pair_, "nonadjacent pair v,w");
        c->add_flag("--all-pairs", all_pairs_);
        c->add_option("--out", out_path_)->required();

        c = leaf(construct, "girth-hypergraph", "random r-uniform hypergraph with girth >= r+2", [this] { return cmd_girth(); }, true);
        c->add_option("--t", t_)->required();
        c->add_option("--r", r_)->required();
        c->add_option("--out", out_path_)->required();

        c = leaf(verify, "linear", "pairwise edge intersections <= 1", [this] { return cmd_verify_linear(); });
        c->add_option("file", in_)->required();
        c = leaf(verify, "triangle-free", "no hypergraph triangle", [this] { return cmd_verify_triangle(); });
        c->add_option("file", in_)->required();
        c = leaf(verify, "girth", "no loose cycle shorter than --g", [this] { return cmd_verify_girth(); });
        c->add_option("file", in_)->required();
        c->add_option("--g", girth_)->required();
        c = leaf(verify, "subgraph-free", "graph has no copy of --pattern", [this] { return cmd_verify_subgraph(); });
        c->add_option("file", in_)->required();
        c->add_option("--pattern", g_)->required();
        c = leaf(verify, "clique-cover", "cover file is an edge-disjoint total clique cover", [this] { return cmd_verify_cover(); });
        c->add_option("file", in_)->required();
        c->add_option("--cover", cover_, "cliques in hypergraph format")->required();
        c = leaf(verify, "hom-free", "no homomorphism G -> F", [this] { return cmd_verify_hom(); });
        c->add_option("--f", f_)->required();
        c->add_option("--g", g_)->required();

        c = leaf(search, "independent-set", "maximum independent set", [this] { return cmd_mis(); });
        c->add_option("--in", in_)->required();
        c->add_option("--out", out_path_);
        c = leaf(search, "max-ffree", "largest F-free vertex set", [this] { return cmd_ffree(); });
        c->add_option("--in", in_)->required();
        c->add_option("--f", f_)->required();
        c->add_option("--out", out_path_);
        c = leaf(search, "spencer", "hypergraph independent set by sample-and-delete", [this] { return cmd_spencer(); }, true);
        c->add_option("--in", in_)->required();
        c->add_option("--trials", trials_)->capture_default_str();
        c->add_option("--out", out_path_);
        c = leaf(search, "drc", "dependent random choice", [this] { return cmd_drc(); }, true);
        c->add_option("--in", in_)->required();
        c->add_option("--x", x_, "vertex list, e.g. 0-9,12")->required();
        c->add_option("--y", y_)->required();
        c->add_option("--s", s_)->capture_default_str();
        c->add_option("--trials,--retries", trials_)->capture_default_str();
        c->add_option("--out", out_path_);
        c = leaf(search, "sunflower", "Erdős–Rado sunflower among hyperedges", [this] { return cmd_sunflower(); });
        c->add_option("--in", in_)->required();
        c->add_option("--m", m_)->capture_default_str();
        c->add_option("--out", out_path_);
        c = leaf(search, "dense-pair", "dyadic dense pair through a vertex", [this] { return cmd_dense_pair(); });
        c->add_option("--in", in_)->required();
        c->add_option("--v0", v0_)->required();
        c->add_option("--k", k_)->required();
        c->add_option("--out", out_path_);
        c = leaf(search, "cycles", "count k-cycles (through --v0 if given)", [this] { return cmd_cycles(); });
        c->add_option("--in", in_)->required();
        c->add_option("--k", k_)->required();
        c->add_option("--v0", v0_);

        c = leaf(pipeline, "ckfree", "large C_k-free set in a K4-free graph", [this] { return cmd_ckfree(); }, true);
        c->add_option("--in", in_)->required();
        c->add_option("--k", k_)->required();
        c->add_option("--trials", trials_)->capture_default_str();
        c->add_option("--force-branch", branch_);
        c->add_flag("--ignore-delta-cutoff", ignore_cutoff_);
        c->add_option("--out", out_path_);
        c = leaf(pipeline, "ksfree", "large C_k-free set in a K_s-free graph", [this] { return cmd_ksfree(); }, true);
        c->add_option("--in", in_)->required();
        c->add_option("--s", s_)->required();
        c->add_option("--k", k_)->required();
        c->add_option("--trials", trials_)->capture_default_str();
        c->add_option("--out", out_path_);
        c = leaf(pipeline, "ramsey-witness", "check a Ramsey-graph witness for f(r(G,t)-1) < r(F,t)", [this] { return cmd_ramsey(); });
        c->add_option("--host,--in", in_, "candidate Ramsey graph H")->required();
        c->add_option("--f", f_)->required();
        c->add_option("--g", g_)->required();
        c->add_option("--t", t_)->required();
        c->add_option("--rft", rft_)->required();
        c->add_option("--out", out_path_);
        c = leaf(pipeline, "gplus", "G+, G*, G** for a nonadjacent pair", [this] { return cmd_gplus(); });
        c->add_option("--g", g_)->required();
        c->add_option("--v", v_)->required();
        c->add_option("--w", w_)->required();
        c->add_option("--out", out_path_)->required();
        c = leaf(pipeline, "sprop", "S-edge statistics of an r-uniform hypergraph", [this] { return cmd_sprop(); }, true);
        c->add_option("--in", in_)->required();
        c->add_option("--r", r_)->required();
        c->add_option("--samples", samples_)->capture_default_str();
        c->add_option("--out", out_path_);

        c = leaf(oracle, "brute-force-f", "exact f_{F,G}(n) for n <= 8", [this] { return cmd_brute(); });
        c->add_option("--f", f_)->required();
        c->add_option("--g", g_)->required();
        c->add_option("--n", n_)->required();
        c->add_option("--out", out_path_);
    }

    // ---- construct -------------------------------------------------------

    int cmd_efr()
    {
        auto inst = efr_hypergraph(d_, r_, big_r_);
        auto cert = efr_certificate(inst);
        cert.note("vertex_numbering", {{"rule", "part-major; within part i, mixed radix in base i*r, coordinate 0 "
                                                "least significant, coordinates shifted by 1"},
                                          {"part_offsets", inst.part_offsets}});
        emit_instance(out_path_, hypergraph_text(inst.hypergraph));
        emit(cert);
        summary({{"edges", std::to_string(inst.hypergraph.size())}, {"declaredN", std::to_string(inst.declared_order)},
            {"verdict", exit_for(cert) ? "fail" : "pass"}});
        return exit_for(cert);
    }

    int cmd_theorem1()
    {
        Graph f = pattern(f_);
        Theorem1Options opt;
        opt.measure = ! no_measure_;
        if (budget_nodes_ || budget_ms_)
            opt.measure_budget = budget();
        auto res = theorem1_build(d_, r_, big_r_, f, SeededRng(seed_), opt);
        emit_instance(out_path_, graph_text(res.graph));
        emit_instance(out_path_ + ".colouring.json", res.colouring.to_json().dump(2) + "\n");
        emit(res.certificate);
        summary({{"vertices", std::to_string(res.graph.order())}, {"edges", std::to_string(res.graph.size())},
            {"triangle_free", to_string(res.certificate.verdict("triangle_free"))}});
        return exit_for(res.certificate);
    }

    int cmd_t4p1()
    {
        Graph g = pattern(g_), f = pattern(f_);
        Theorem4Part1Options opt;
        opt.verify_budget = budget();
        opt.measure = ! no_measure_;
        auto res = theorem4_part1_build(g, f, n_, d_, girth_, SeededRng(seed_), opt);
        emit_instance(out_path_, graph_text(res.graph));
        emit_instance(out_path_ + ".bipartite.g", graph_text(res.bipartite.graph));
        emit_instance(out_path_ + ".colouring.json", res.colouring.to_json().dump(2) + "\n");
        emit(res.certificate);
        summary({{"vertices", std::to_string(res.graph.order())}, {"edges", std::to_string(res.graph.size())},
            {"g_free", to_string(res.certificate.verdict("g_free"))}});
        return exit_for(res.certificate);
    }

    int cmd_t4p2()
    {
        Graph g = pattern(g_);
        Theorem4Part2Options opt;
        opt.verify_budget = budget();
        opt.try_all_pairs = all_pairs_;
        if (! pair_.empty()) {
            auto p = parse_vertex_list(pair_);
            if (p.size() != 2)
                throw UsageError("--pair needs two vertices v,w");
            opt.pair = std::pair{p[0], p[1]};
        }
        Theorem4Part2Result res;
        if (! fstar_path_.empty()) {
            res = theorem4_part2_build(g, hypergraph_file(fstar_path_), SeededRng(seed_), opt);
        } else {
            if (t_ <= 0)
                throw UsageError("--t or --fstar is required");
            res = theorem4_part2_build(g, t_, SeededRng(seed_), opt);
            emit_instance(out_path_ + ".fstar.hg", hypergraph_text(res.fstar.hypergraph));
        }
        emit_instance(out_path_, graph_text(res.f));
        emit(res.certificate);
        summary({{"vertices", std::to_string(res.f.order())}, {"edges", std::to_string(res.f.size())},
            {"g_free", to_string(res.certificate.verdict("g_free"))}});
        return exit_for(res.certificate);
    }

    int cmd_girth()
    {
        auto res = random_girth_hypergraph(t_, r_, SeededRng(seed_));
        emit_instance(out_path_, hypergraph_text(res.hypergraph));
        emit(res.certificate);
        summary({{"edges", std::to_string(res.hypergraph.size())},
            {"girth", to_string(res.certificate.verdict("girth_at_least_r_plus_2"))}});
        return exit_for(res.certificate);
    }

    // ---- verify ----------------------------------------------------------

    int cmd_verify_linear()
    {
        auto h = hypergraph_file(in_);
        auto a = hypergraph_is_linear(h);
        return verdict_line(a.pass, a.witness(h));
    }

    int cmd_verify_triangle()
    {
        auto h = hypergraph_file(in_);
        auto a = hypergraph_is_triangle_free(h);
        return verdict_line(a.pass, a.witness(h));
    }

    int cmd_verify_girth()
    {
        auto h = hypergraph_file(in_);
        if (girth_ < 2)
            throw UsageError("--g must be at least 2");
        auto a = hypergraph_girth_at_least(h, girth_);
        return verdict_line(a.pass, a.witness(h));
    }

    int cmd_verify_subgraph()
    {
        auto host = graph_file(in_);
        auto pat = pattern(g_);
        if (pat.order() < 1)
            throw UsageError("pattern must have a vertex");
        auto res = contains_subgraph(host, pat, budget());
        if (res.status == SearchStatus::Unknown) {
            out_ << "unknown (budget exhausted after " << res.nodes << " nodes)\n";
            return exit_fail;
        }
        return verdict_line(res.absent(), {{"embedding", res.embedding}});
    }

    int cmd_verify_cover()
    {
        auto host = graph_file(in_);
        auto cliques = hypergraph_file(cover_);
        if (cliques.order() != host.order())
            throw UsageError("cover and graph have different vertex counts");
        CliqueCover cover{host, cliques.edges(), {}};
        if (auto bad = find_cover_violation(cover))
            return verdict_line(false, *bad);
        if (auto e = find_uncovered_edge(cover))
            return verdict_line(false, {{"kind", "uncovered-edge"}, {"edge", *e}});
        return verdict_line(true, nullptr);
    }

    int cmd_verify_hom()
    {
        auto f = pattern(f_), g = pattern(g_);
        auto res = is_hom_free(f, g);
        return verdict_line(res.hom_free, {{"homomorphism", res.witness}});
    }

    // ---- search ----------------------------------------------------------

    void emit_set(const std::string & name, const VertexSet & set, Certificate & cert)
    {
        cert.measure(name, set.members());
        if (! out_path_.empty())
            emit_instance(out_path_, nlohmann::json{{name, set.members()}}.dump(2) + "\n");
        emit(cert);
    }

    int cmd_mis()
    {
        auto g = graph_file(in_);
        auto res = max_independent_set(g, budget());
        Certificate cert("independent-set");
        cert.param("n", g.order());
        cert.check("independent", is_independent(g, res.set));
        cert.measure("size", res.size());
        cert.measure("status", to_string(res.status));
        emit_set("set", res.set, cert);
        summary({{"instance", in_}, {"size", std::to_string(res.size())}, {"status", to_string(res.status)},
            {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_ffree()
    {
        auto g = graph_file(in_);
        auto f = pattern(f_);
        auto res = max_f_free_subset(g, f, budget());
        Certificate cert("max-ffree");
        cert.param("n", g.order());
        cert.param("F.edges", f.edges());
        cert.check("f_free", is_f_free_set(g, f, res.set));
        cert.measure("size", res.size());
        cert.measure("status", to_string(res.status));
        emit_set("set", res.set, cert);
        summary({{"instance", in_}, {"size", std::to_string(res.size())}, {"status", to_string(res.status)},
            {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_spencer()
    {
        auto h = hypergraph_file(in_);
        auto res = spencer_independent_set(h, SeededRng(seed_), trials_);
        Certificate cert("spencer");
        cert.param("trials", trials_);
        cert.seed("root", seed_);
        cert.check("independent", is_hypergraph_independent(h, res.set));
        cert.measure("size", res.set.count());
        cert.measure("bound", res.bound);
        cert.measure("average_degree", res.average_degree);
        cert.measure("probability", res.probability);
        cert.measure("trial_sizes", res.trial_sizes);
        emit_set("set", res.set, cert);
        summary({{"instance", in_}, {"size", std::to_string(res.set.count())}, {"bound", std::to_string(res.bound)},
            {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_drc()
    {
        auto g = graph_file(in_);
        auto x = to_set(parse_vertex_list(x_), g.order());
        auto y = to_set(parse_vertex_list(y_), g.order());
        auto res = dependent_random_choice(g, x, y, s_, SeededRng(seed_), trials_);
        Certificate cert("drc");
        cert.param("s", s_);
        cert.param("retries", trials_);
        cert.seed("root", seed_);
        auto bad = find_drc_violation(g, x, res.z, res.threshold);
        cert.check("pair_condition", ! bad, bad ? nlohmann::json(*bad) : nlohmann::json());
        cert.measure("drc", res.to_json());
        emit_set("z", res.z, cert);
        summary({{"instance", in_}, {"size", std::to_string(res.z.count())},
            {"status", res.target_met ? "target-met" : "target-missed"}, {"verdict", bad ? "fail" : "pass"}});
        return bad ? exit_fail : exit_pass;
    }

    int cmd_sunflower()
    {
        auto h = hypergraph_file(in_);
        auto res = erdos_rado_sunflower(h.edges(), m_);
        Certificate cert("sunflower");
        cert.param("m", m_);
        cert.measure("family_size", h.size());
        cert.measure("finished", res.finished);
        if (res.sunflower) {
            cert.check("sunflower", is_sunflower(*res.sunflower));
            cert.measure("petals", res.sunflower->petals);
            cert.measure("core", res.sunflower->core);
        }
        if (! out_path_.empty())
            emit_instance(out_path_, cert.measures().dump(2) + "\n");
        emit(cert);
        summary({{"instance", in_}, {"found", res.sunflower ? "yes" : "no"},
            {"core", res.sunflower ? nlohmann::json(res.sunflower->core).dump() : "-"},
            {"status", res.finished ? "complete" : "unknown"}, {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_dense_pair()
    {
        auto g = graph_file(in_);
        if (v0_ < 0 || v0_ >= g.order())
            throw UsageError("--v0 out of range");
        auto res = ckprop_dense_pair(g, v0_, k_);
        Certificate cert("dense-pair");
        cert.param("v0", v0_);
        cert.param("k", k_);
        bool recount = count_cross_edges(g, res.x, res.y) == res.cross_edges;
        cert.check("cross_edges_recount", recount);
        cert.measure("pair", res.to_json());
        if (! out_path_.empty())
            emit_instance(out_path_, res.to_json().dump(2) + "\n");
        emit(cert);
        summary({{"instance", in_}, {"x", std::to_string(res.x.count())}, {"y", std::to_string(res.y.count())},
            {"density", std::to_string(res.density)}, {"verdict", recount ? "pass" : "fail"}});
        return recount ? exit_pass : exit_fail;
    }

    int cmd_cycles()
    {
        auto g = graph_file(in_);
        long long count;
        if (v0_ >= 0) {
            if (v0_ >= g.order())
                throw UsageError("--v0 out of range");
            count = count_k_cycles_through(g, v0_, k_);
        } else {
            if (k_ < 3 || k_ > 12)
                throw InputError("cycle length k must lie in [3, 12]");
            count = static_cast<long long>(list_k_cycles(g, k_).size());
        }
        summary({{"instance", in_}, {"k", std::to_string(k_)}, {"count", std::to_string(count)}});
        return exit_pass;
    }

    // ---- pipeline --------------------------------------------------------

    CkFreeOptions ckfree_options() const
    {
        CkFreeOptions opt;
        if (budget_nodes_ || budget_ms_)
            opt.budget = budget();
        opt.spencer_trials = trials_;
        opt.drc_retries = trials_;
        opt.respect_delta_cutoff = ! ignore_cutoff_;
        if (! branch_.empty())
            opt.force_branch = branch_;
        return opt;
    }

    int cmd_ckfree()
    {
        auto g = graph_file(in_);
        auto res = ckfree_subset(g, k_, SeededRng(seed_), ckfree_options());
        emit_set("set", res.set, res.certificate);
        summary({{"instance", in_}, {"branch", res.branch}, {"source", res.source},
            {"size", std::to_string(res.set.count())}, {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_ksfree()
    {
        auto g = graph_file(in_);
        auto res = ksfree_recursion(g, s_, k_, SeededRng(seed_), ckfree_options());
        emit_set("set", res.set, res.certificate);
        std::string path;
        for (auto & step : res.trace)
            path += (path.empty() ? "" : ">") + step.at("action").get<std::string>();
        summary({{"instance", in_}, {"branch", path}, {"size", std::to_string(res.set.count())}, {"verdict", "pass"}});
        return exit_pass;
    }

    int cmd_ramsey()
    {
        auto h = graph_file(in_);
        auto f = pattern(f_), g = pattern(g_);
        auto cert = ramsey_witness_check(h, f, g, t_, rft_, budget());
        emit(cert);
        summary({{"instance", in_}, {"G_free", to_string(cert.verdict("G_free"))},
            {"independence_below_t", to_string(cert.verdict("independence_below_t"))},
            {"F_free_below_rFt", to_string(cert.verdict("F_free_below_rFt"))},
            {"verdict", exit_for(cert) ? "fail" : "pass"}});
        return exit_for(cert);
    }

    int cmd_gplus()
    {
        auto g = pattern(g_);
        auto fam = gplus_family(g, v_, w_);
        Certificate cert("gplus");
        cert.param("G.edges", g.edges());
        cert.param("v", v_);
        cert.param("w", w_);
        bool clones = true;
        for (int x = 0; x < g.order(); ++x)
            if (x != v_ && x != w_ && fam.gplus.adjacent(v_, x) != fam.gplus.adjacent(w_, x))
                clones = false;
        cert.check("clones", clones);
        cert.measure("gstar_labels", fam.gstar_labels);
        cert.measure("gstarstar_labels", fam.gstarstar_labels);
        cert.measure("v_in_gstar", fam.v_in_gstar);
        emit_instance(out_path_, graph_text(fam.gplus));
        emit_instance(out_path_ + ".gstar.g", graph_text(fam.gstar));
        emit_instance(out_path_ + ".gstarstar.g", graph_text(fam.gstarstar));
        emit(cert);
        summary({{"gplus_edges", std::to_string(fam.gplus.size())}, {"gstar_edges", std::to_string(fam.gstar.size())},
            {"gstarstar_edges", std::to_string(fam.gstarstar.size())}, {"verdict", clones ? "pass" : "fail"}});
        return clones ? exit_pass : exit_fail;
    }

    int cmd_sprop()
    {
        auto h = hypergraph_file(in_);
        auto rep = sprop_statistics(h, r_, samples_, SeededRng(seed_));
        Certificate cert("sprop");
        cert.param("r", r_);
        cert.param("samples", samples_);
        cert.seed("root", seed_);
        cert.measure("report", rep.to_json());
        if (! out_path_.empty())
            emit_instance(out_path_, rep.to_json().dump(2) + "\n");
        emit(cert);
        summary({{"instance", in_}, {"evaluated", std::to_string(rep.evaluated)},
            {"passed", std::to_string(rep.passed)}, {"exhaustive", rep.exhaustive ? "yes" : "no"}});
        return exit_pass;
    }

    int cmd_brute()
    {
        auto f = pattern(f_), g = pattern(g_);
        auto res = brute_force_f(f, g, n_, budget());
        Certificate cert("brute-force-f");
        cert.param("F.edges", f.edges());
        cert.param("G.edges", g.edges());
        cert.param("n", n_);
        cert.measure("result", res.to_json());
        if (! out_path_.empty())
            emit_instance(out_path_, res.to_json().dump(2) + "\n");
        emit(cert);
        out_ << res.value << "\n";
        summary({{"n", std::to_string(n_)}, {"value", std::to_string(res.value)},
            {"status", res.exact ? "exact" : "lower-bound"}, {"graphs", std::to_string(res.graphs)}});
        return exit_pass;
    }

    // ---- replay ----------------------------------------------------------

    int cmd_replay()
    {
        auto manifest = nlohmann::json::parse(read_file(manifest_path_), nullptr, false);
        if (manifest.is_discarded() || ! manifest.contains("argv"))
            throw UsageError("not a manifest: " + manifest_path_);
        auto args = manifest.at("argv").get<std::vector<std::string>>();
        std::string original;
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "--out")
                original = args[i + 1];
        if (out_path_.empty()) {
            Runner again(out_, err_);
            return again.run(args);
        }
        if (original.empty())
            throw UsageError("manifest has no --out to redirect");
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "--out")
                args[i + 1] = out_path_;
        Runner again(out_, err_);
        int code = again.run(args);
        bool identical = true;
        for (auto & path : manifest.at("outputs")) {
            std::string before = path.get<std::string>();
            std::string after = out_path_ + before.substr(original.size());
            bool same = std::filesystem::exists(after) && read_file(before) == read_file(after);
            out_ << (same ? "identical " : "differs ") << after << "\n";
            identical = identical && same;
        }
        return identical ? code : exit_fail;
    }

    std::ostream & out_;
    std::ostream & err_;
    CLI::App app_;
    CLI::App * leaf_ = nullptr;
    std::map<std::string, std::function<int()>> handlers_;
    std::set<std::string> randomized_;
    std::vector<std::string> argv_;
    std::string command_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> inputs_, outputs_;

    std::uint64_t seed_ = 0;
    int threads_ = 0;
    long budget_ms_ = 0;
    std::uint64_t budget_nodes_ = 0;
    int trials_ = 50;
    std::string out_path_, manifest_path_;
    int d_ = 0, r_ = 0, big_r_ = 0, t_ = 0, n_ = 0, k_ = 0, s_ = 3, m_ = 3, v_ = -1, w_ = -1, v0_ = -1;
    int girth_ = 0, rft_ = 0, samples_ = 200;
    std::string in_, f_, g_, cover_, x_, y_, fstar_path_, pair_, branch_;
    bool no_measure_ = false, all_pairs_ = false, ignore_cutoff_ = false;
};

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    Runner runner(out, err);
    return runner.run(args);
}

} // namespace erogers
