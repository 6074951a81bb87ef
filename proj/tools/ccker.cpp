// ccker: analyze relations, kernelize, reduce, solve, verify and generate instances.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error, 3 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "ccker/io.hpp"
#include "ccker/oracles.hpp"
#include "ccker/polykernel.hpp"
#include "ccker/random_instances.hpp"
#include "ccker/reductions.hpp"

namespace fs = std::filesystem;
using namespace ccker;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    std::string input;
    std::string output;
    std::string problem;
    std::string relation;
    std::string variant = "singletons";
    std::string mode;
    std::string against;
    int d = 0;
    int l = 0;
    int q = 0;
    int t = 0;
    int k = 0;
    int n = 0;
    int clauses = -1;
    double density = 0.5;
    double edge_density = 0.2;
    std::uint64_t seed = 1;
    std::uint64_t budget = Limits{}.search_space;
    bool count = false;

    Limits limits() const
    {
        Limits l;
        l.search_space = budget;
        return l;
    }
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to `path` via a temporary file and rename, or to stdout when empty.
void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw UsageError("cannot write " + tmp.string());
        out << content;
        if (!out.flush())
            throw UsageError("write to " + tmp.string() + " failed");
    }
    fs::rename(tmp, target);
}

fs::path base_dir(const std::string& input)
{
    return fs::path(input).parent_path();
}

std::string detect_problem(const RunConfig& cfg, const std::string& text)
{
    if (!cfg.problem.empty())
        return cfg.problem;
    std::istringstream in(text);
    std::string kind = sniff_kind(in);
    if (kind == "p")
        return "cnf";
    if (kind == "hgraph")
        return "hypergraph";
    return kind;
}

/// `--relation` takes either a file path or an inline spec such as "nur d=1 l=3 q=5".
std::shared_ptr<const Relation> load_relation(const std::string& spec, std::string* rel_spec)
{
    if (spec.empty())
        throw UsageError("--relation is required");
    std::string text = fs::exists(spec) ? read_file(spec) : spec;
    std::istringstream in(text);
    auto rel = std::make_shared<const Relation>(parse_relation(in));
    if (rel_spec)
        *rel_spec = (!fs::exists(spec) && spec.rfind("nur", 0) == 0) ? spec : "";
    return rel;
}

std::string join(const std::vector<int>& v, char sep = ' ')
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

std::string header_from(const std::vector<std::pair<std::string, std::string>>& kv)
{
    return metadata_header(kv);
}

std::vector<std::pair<std::string, std::string>> report_pairs(const ReductionReport& r)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(r.to_text());
    for (std::string line; std::getline(in, line);) {
        auto eq = line.find('=');
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

// ---- analyze ----

int cmd_analyze(const RunConfig& cfg)
{
    std::string source = cfg.input.empty() ? cfg.relation : cfg.input;
    if (source.empty())
        throw UsageError("analyze needs a relation file or --relation");
    std::string text = fs::exists(source) ? read_file(source) : source;
    std::istringstream in(text);
    Relation rel = parse_relation(in, cfg.limits());
    std::cout << "q=" << rel.q() << "\n";
    std::cout << "r=" << rel.r() << "\n";
    std::cout << "tuples=" << rel.size() << "\n";
    std::cout << "invariant=" << (is_permutation_invariant(rel) ? "yes" : "no") << "\n";
    int k = max_or_arity(rel, cfg.limits());
    std::cout << "max_or_arity=" << k << "\n";
    if (k > 0) {
        auto w = find_or_witness(rel, k, cfg.limits());
        std::vector<int> positions;
        for (int p : w->positions)
            positions.push_back(p + 1);
        std::cout << "witness.positions=" << join(positions) << "\n";
        std::cout << "witness.alpha=" << join(w->alpha) << "\n";
        std::cout << "witness.beta=" << join(w->beta) << "\n";
    }
    std::istringstream first(text);
    std::string keyword;
    first >> keyword;
    while (keyword.rfind('#', 0) == 0) {
        std::string rest;
        std::getline(first, rest);
        first >> keyword;
    }
    if (keyword == "nur") {
        int d = 0;
        int l = 0;
        int q = 0;
        std::string tok;
        while (first >> tok) {
            if (tok.rfind("d=", 0) == 0)
                d = std::stoi(tok.substr(2));
            else if (tok.rfind("l=", 0) == 0)
                l = std::stoi(tok.substr(2));
            else if (tok.rfind("q=", 0) == 0)
                q = std::stoi(tok.substr(2));
        }
        std::cout << "eta=" << eta(d, l, q) << "\n";
        std::vector<int> items;
        if (l >= 2 && q >= d + 2)
            items.push_back(1);
        if (q >= d + 1)
            items.push_back(2);
        items.push_back(3);
        std::cout << "or_items=" << join(items, ',') << "\n";
        std::vector<int> caps = capture_items(d, l, q);
        std::cout << "capture_items=" << join(caps, ',') << "\n";
    }
    return kExitOk;
}

// ---- kernelize ----

struct KernelRun {
    std::string output;
    std::vector<std::pair<std::string, std::string>> meta;
};

KernelRun run_kernel(const RunConfig& cfg, const std::string& problem, const std::string& text)
{
    std::istringstream in(text);
    KernelRun run;
    if (problem == "urfc") {
        auto k = kernelize_urfc(parse_urfc(in));
        run.meta = describe(k.meta);
        run.output = serialize_urfc(k.instance);
    } else if (problem == "gurfc") {
        auto k = kernelize_gurfc(parse_gurfc(in));
        run.meta = {{"kernel", "gurfc"}, {"blocks", std::to_string(k.blocks.size())}, {"bound", std::to_string(k.bound)}};
        for (std::size_t i = 0; i < k.blocks.size(); ++i)
            for (auto& [key, value] : describe(k.blocks[i]))
                run.meta.emplace_back("block" + std::to_string(i + 1) + "." + key, value);
        run.output = serialize_gurfc(k.instance);
    } else if (problem == "rcc") {
        std::string rel_spec;
        auto inst = parse_rcc(in, base_dir(cfg.input), cfg.limits(), &rel_spec);
        auto out = kernelize_carbonnel(inst);
        run.meta = {{"kernel", "carbonnel"},
                    {"input_constraints", std::to_string(inst.constraints.size())},
                    {"output_constraints", std::to_string(out.constraints.size())}};
        run.output = serialize_rcc(out, rel_spec);
    } else if (problem == "cliquekv") {
        if (cfg.q < 3)
            throw UsageError("kernelize --problem cliquekv needs --q >= 3");
        auto inst = parse_cliquekv(in);
        auto k = kernelize_cliquekv(inst, cfg.q, cfg.t > 0 ? std::optional<int>(cfg.t) : std::nullopt);
        run.meta = report_pairs(k.report);
        run.meta.emplace_back("q", std::to_string(cfg.q));
        run.meta.emplace_back("t", std::to_string(k.t));
        run.meta.emplace_back("decided", k.decided_no ? "NO" : "no");
        run.output = serialize_cliquekv(k.instance);
    } else {
        throw UsageError("kernelize supports urfc, gurfc, rcc and cliquekv, not '" + problem + "'");
    }
    return run;
}

int cmd_kernelize(const RunConfig& cfg)
{
    std::string text = read_file(cfg.input);
    auto run = run_kernel(cfg, detect_problem(cfg, text), text);
    write_output(cfg.output, header_from(run.meta) + run.output);
    if (!cfg.output.empty())
        for (const auto& [k, v] : run.meta)
            std::cout << k << "=" << v << "\n";
    return kExitOk;
}

// ---- reduce ----

struct ReduceRun {
    std::string output;
    ReductionReport report;
};

int infer_width(const CnfFormula& f, int requested)
{
    if (requested > 0)
        return requested;
    if (f.clauses.empty())
        throw UsageError("cannot infer the clause width of an empty formula; pass --k");
    return static_cast<int>(f.clauses.front().size());
}

NaeVariant parse_variant(const std::string& v)
{
    if (v == "singletons")
        return NaeVariant::Singletons;
    if (v == "pairs")
        return NaeVariant::Pairs;
    throw UsageError("--variant must be singletons or pairs");
}

int cmd_reduce(const RunConfig& cfg)
{
    std::string text = read_file(cfg.input);
    std::istringstream in(text);
    const std::string& p = cfg.problem;
    ReduceRun run;
    if (p == "sat-rclc") {
        auto f = parse_dimacs(in);
        std::string rel_spec;
        auto rel = load_relation(cfg.relation, &rel_spec);
        int k = infer_width(f, cfg.k);
        auto w = find_or_witness(*rel, k, cfg.limits());
        if (!w)
            throw UsageError("the relation defines no OR of arity " + std::to_string(k));
        auto red = sat_to_rclc(f, rel, *w);
        run.output = serialize_rclc(red.instance, rel_spec);
        run.report = red.report;
    } else if (p == "rclc-rcc") {
        std::string rel_spec;
        auto inst = parse_rclc(in, base_dir(cfg.input), cfg.limits(), &rel_spec);
        auto red = rclc_to_rcc(inst);
        run.output = serialize_rcc(red.instance, rel_spec);
        run.report = red.report;
    } else if (p == "nae-urfc") {
        auto f = parse_dimacs(in);
        auto red = nae_to_urfc(f, infer_width(f, cfg.k), parse_variant(cfg.variant));
        run.output = serialize_urfc(red.instance);
        run.report = red.report;
    } else if (p == "urfc-hypergraph") {
        auto red = urfc_to_hypergraph(parse_urfc(in));
        run.output = serialize_hypergraph(red.hypergraph);
        run.report = red.report;
    } else if (p == "cliquekv-gurfc") {
        if (cfg.q < 1 || cfg.t < 1)
            throw UsageError("cliquekv-gurfc needs --q and --t");
        auto red = extract_clique_constraints(parse_cliquekv(in), cfg.q, cfg.t);
        run.output = serialize_gurfc(red.instance);
        run.report = red.report;
    } else if (p == "gurfc-cliquekv") {
        auto red = gurfc_to_cliquekv(parse_gurfc(in));
        run.output = serialize_cliquekv(red.instance);
        run.report = red.report;
    } else {
        throw UsageError("unknown reduction '" + p +
                         "'; expected sat-rclc, rclc-rcc, nae-urfc, urfc-hypergraph, cliquekv-gurfc or gurfc-cliquekv");
    }
    write_output(cfg.output, header_from(report_pairs(run.report)) + run.output);
    if (!cfg.output.empty())
        std::cout << run.report.to_text();
    return kExitOk;
}

// ---- solve ----

CnfMode parse_cnf_mode(const std::string& m)
{
    if (m.empty() || m == "sat")
        return CnfMode::Sat;
    if (m == "nae")
        return CnfMode::Nae;
    throw UsageError("--mode for cnf must be sat or nae");
}

/// Number of solutions, or just 0/1 when `all` is false.
std::size_t count_solutions(const RunConfig& cfg, const std::string& problem, const std::string& text, bool all)
{
    std::istringstream in(text);
    const std::size_t cap = all ? kAllSolutions : 1;
    const Limits lim = cfg.limits();
    if (problem == "rcc")
        return solve_rcc(parse_rcc(in, base_dir(cfg.input), lim), cap, lim).size();
    if (problem == "rclc")
        return solve_rclc(parse_rclc(in, base_dir(cfg.input), lim), cap, lim).size();
    if (problem == "urfc")
        return solve_urfc(parse_urfc(in), cap, lim).size();
    if (problem == "gurfc")
        return solve_urfc(parse_gurfc(in), cap, lim).size();
    if (problem == "hypergraph" || problem == "graph" || problem == "cliquekv") {
        if (cfg.q < 1)
            throw UsageError("--q is required for " + problem);
        if (problem == "hypergraph")
            return solve_hypergraph_qcol(parse_hypergraph(in), cfg.q, cap, lim).size();
        Graph g = problem == "graph" ? parse_graph(in) : parse_cliquekv(in).graph;
        return solve_graph_qcol(g, cfg.q, cap, lim).size();
    }
    if (problem == "cnf")
        return solve_cnf(parse_dimacs(in), parse_cnf_mode(cfg.mode), lim).size();
    throw UsageError("cannot solve problem kind '" + problem + "'");
}

int cmd_solve(const RunConfig& cfg)
{
    std::string text = read_file(cfg.input);
    std::string problem = detect_problem(cfg, text);
    bool all = cfg.count || problem == "cnf";
    std::size_t n = count_solutions(cfg, problem, text, all);
    std::cout << (n > 0 ? "YES" : "NO") << "\n";
    if (cfg.count)
        std::cout << "count=" << n << "\n";
    return kExitOk;
}

// ---- verify ----

int cmd_verify(const RunConfig& cfg)
{
    std::string text = read_file(cfg.input);
    const Limits lim = cfg.limits();
    if (cfg.mode == "kernel") {
        std::string problem = detect_problem(cfg, text);
        std::string after = cfg.against.empty() ? run_kernel(cfg, problem, text).output : read_file(cfg.against);
        std::istringstream a(text);
        std::istringstream b(after);
        bool same = false;
        if (problem == "urfc") {
            auto before = parse_urfc(a);
            auto kernel = parse_urfc(b);
            auto k = kernelize_urfc(before);
            if (k.meta.decided) // a decided kernel only preserves the answer
                same = solve_urfc(before, 1, lim).empty() == solve_urfc(kernel, 1, lim).empty();
            else
                same = solve_urfc(before, kAllSolutions, lim) == solve_urfc(kernel, kAllSolutions, lim);
        } else if (problem == "gurfc") {
            same = solve_urfc(parse_gurfc(a), kAllSolutions, lim) == solve_urfc(parse_gurfc(b), kAllSolutions, lim);
        } else if (problem == "rcc") {
            same = solve_rcc(parse_rcc(a, base_dir(cfg.input), lim), kAllSolutions, lim) ==
                   solve_rcc(parse_rcc(b, base_dir(cfg.input), lim), kAllSolutions, lim);
        } else if (problem == "cliquekv") {
            if (cfg.q < 1)
                throw UsageError("--q is required for cliquekv");
            same = solve_graph_qcol(parse_cliquekv(a).graph, cfg.q, 1, lim).empty() ==
                   solve_graph_qcol(parse_cliquekv(b).graph, cfg.q, 1, lim).empty();
        } else {
            throw UsageError("kernel verification supports urfc, gurfc, rcc and cliquekv");
        }
        std::cout << (same ? "verified" : "MISMATCH") << "\n";
        return same ? kExitOk : kExitMismatch;
    }
    if (cfg.mode == "reduction") {
        std::istringstream in(text);
        const std::string& p = cfg.problem;
        bool before = false;
        bool after = false;
        if (p == "sat-rclc" || p == "nae-urfc") {
            auto f = parse_dimacs(in);
            if (p == "sat-rclc") {
                auto rel = load_relation(cfg.relation, nullptr);
                int k = infer_width(f, cfg.k);
                auto w = find_or_witness(*rel, k, lim);
                if (!w)
                    throw UsageError("the relation defines no OR of arity " + std::to_string(k));
                before = !solve_cnf(f, CnfMode::Sat, lim).empty();
                after = !solve_rclc(sat_to_rclc(f, rel, *w).instance, 1, lim).empty();
            } else {
                before = !solve_cnf(f, CnfMode::Nae, lim).empty();
                after = !solve_urfc(nae_to_urfc(f, infer_width(f, cfg.k), parse_variant(cfg.variant)).instance, 1, lim)
                             .empty();
            }
        } else if (p == "rclc-rcc") {
            auto inst = parse_rclc(in, base_dir(cfg.input), lim);
            before = !solve_rclc(inst, 1, lim).empty();
            after = !solve_rcc(rclc_to_rcc(inst).instance, 1, lim).empty();
        } else if (p == "urfc-hypergraph") {
            auto inst = parse_urfc(in);
            before = !solve_urfc(inst, 1, lim).empty();
            after = !solve_hypergraph_qcol(urfc_to_hypergraph(inst).hypergraph, inst.q, 1, lim).empty();
        } else if (p == "cliquekv-gurfc") {
            if (cfg.q < 1 || cfg.t < 1)
                throw UsageError("cliquekv-gurfc needs --q and --t");
            auto inst = parse_cliquekv(in);
            before = !solve_graph_qcol(inst.graph, cfg.q, 1, lim).empty();
            after = !solve_urfc(extract_clique_constraints(inst, cfg.q, cfg.t).instance, 1, lim).empty();
        } else if (p == "gurfc-cliquekv") {
            auto inst = parse_gurfc(in);
            before = !solve_urfc(inst, 1, lim).empty();
            after = !solve_graph_qcol(gurfc_to_cliquekv(inst).instance.graph, inst.q, 1, lim).empty();
        } else {
            throw UsageError("unknown reduction '" + p + "'");
        }
        std::cout << "before=" << (before ? "YES" : "NO") << "\nafter=" << (after ? "YES" : "NO") << "\n";
        std::cout << (before == after ? "verified" : "MISMATCH") << "\n";
        return before == after ? kExitOk : kExitMismatch;
    }
    throw UsageError("verify needs --mode kernel or --mode reduction");
}

// ---- gen ----

int cmd_gen(const RunConfig& cfg)
{
    Rng rng(cfg.seed);
    const std::string& p = cfg.problem;
    std::string out = metadata_header({{"generator", p}, {"seed", std::to_string(cfg.seed)}});
    auto need = [](bool ok, const char* what) {
        if (!ok)
            throw UsageError(what);
    };
    if (p == "urfc") {
        need(cfg.d > 0 && cfg.l > 0 && cfg.q > 0 && cfg.n > 0, "gen urfc needs --d --l --q --n");
        out += serialize_urfc(random_urfc(cfg.n, cfg.d, cfg.l, cfg.q, cfg.density, cfg.edge_density, rng));
    } else if (p == "cnf") {
        need(cfg.n > 0 && cfg.k > 0, "gen cnf needs --n and --k");
        int m = cfg.clauses >= 0 ? cfg.clauses : 4 * cfg.n;
        out += serialize_dimacs(random_cnf(cfg.n, cfg.k, m, rng));
    } else if (p == "cliquekv") {
        need(cfg.k >= 0 && cfg.t > 0, "gen cliquekv needs --k and --t");
        int cliques = cfg.n > 0 ? cfg.n : cfg.k;
        out += serialize_cliquekv(random_cliquekv(cfg.k, cliques, cfg.t, cfg.edge_density, cfg.density, rng));
    } else if (p == "graph") {
        need(cfg.n >= 0, "gen graph needs --n");
        out += serialize_graph(random_graph(cfg.n, cfg.edge_density, rng));
    } else if (p == "hypergraph") {
        need(cfg.n > 0 && cfg.l > 0, "gen hypergraph needs --n and --l");
        int m = cfg.clauses >= 0 ? cfg.clauses : 2 * cfg.n;
        out += serialize_hypergraph(random_hypergraph(cfg.n, cfg.l, m, rng));
    } else if (p == "rcc" || p == "rclc") {
        need(cfg.n > 0, "gen rcc/rclc needs --n and --relation");
        std::string rel_spec;
        auto rel = load_relation(cfg.relation, &rel_spec);
        int m = cfg.clauses >= 0 ? cfg.clauses : cfg.n;
        if (p == "rcc")
            out += serialize_rcc(random_rcc(cfg.n, rel, m, cfg.edge_density, rng), rel_spec);
        else
            out += serialize_rclc(random_rclc(cfg.n, rel, m, cfg.edge_density, cfg.density, rng), rel_spec);
    } else {
        throw UsageError("gen supports urfc, cnf, cliquekv, graph, hypergraph, rcc and rclc");
    }
    write_output(cfg.output, out);
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--problem", cfg.problem, "Problem kind or reduction name");
    sub->add_option("--relation", cfg.relation, "Relation file or inline spec, e.g. \"nur d=1 l=3 q=5\"");
    sub->add_option("--d", cfg.d);
    sub->add_option("--l", cfg.l);
    sub->add_option("--q", cfg.q);
    sub->add_option("--t", cfg.t);
    sub->add_option("--k", cfg.k);
    sub->add_option("--n", cfg.n);
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--budget", cfg.budget, "Search-node budget for the oracles")->envname("CCKER_BUDGET");
    sub->add_option("--variant", cfg.variant, "singletons|pairs");
    sub->add_option("--mode", cfg.mode, "sat|nae|kernel|reduction");
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Constrained-coloring kernels, reductions and oracles"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "Report invariance, OR arity and exponents of a relation");
    analyze->add_option("input", cfg.input, "Relation file");
    auto* kernelize = app.add_subcommand("kernelize", "Kernelize a urfc, gurfc, rcc or cliquekv instance");
    kernelize->add_option("input", cfg.input)->required();
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
    reduce->add_option("input", cfg.input)->required();
    auto* solve = app.add_subcommand("solve", "Decide an instance by exhaustive search");
    solve->add_option("input", cfg.input)->required();
    solve->add_flag("--count", cfg.count, "Also print the number of solutions");
    auto* verify = app.add_subcommand("verify", "Compare oracle answers before and after a kernel or reduction");
    verify->add_option("input", cfg.input)->required();
    verify->add_option("--against", cfg.against, "Precomputed kernel to compare with");
    auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
    gen->add_option("--density", cfg.density, "Tuple (or list/cross-edge) density");
    gen->add_option("--edge-density", cfg.edge_density, "Graph edge density");
    gen->add_option("--clauses", cfg.clauses, "Clause, edge or constraint count");
    for (auto* sub : {analyze, kernelize, reduce, solve, verify, gen})
        add_common(sub, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (cfg.budget == 0) {
        std::cerr << "error: --budget must be positive\n";
        return kExitUsage;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(cfg);
        if (kernelize->parsed())
            return cmd_kernelize(cfg);
        if (reduce->parsed())
            return cmd_reduce(cfg);
        if (solve->parsed())
            return cmd_solve(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        return cmd_gen(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ccker::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
