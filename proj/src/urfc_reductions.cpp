#include "ccker/reductions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace ccker {

namespace {

Vertex literal_vertex(int lit)
{
    return lit > 0 ? 2 * lit - 1 : 2 * (-lit);
}

/// All size-`size` subsets of `pool`, in lexicographic order.
void for_each_subset(const std::vector<Vertex>& pool, int size,
                     const std::function<void(const std::vector<Vertex>&)>& visit)
{
    std::vector<Vertex> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(chosen.size()) == size) {
            visit(chosen);
            return;
        }
        for (std::size_t i = start; i + (static_cast<std::size_t>(size) - chosen.size()) <= pool.size(); ++i) {
            chosen.push_back(pool[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

} // namespace

NaeToUrfc nae_to_urfc(const CnfFormula& f, int k, NaeVariant variant)
{
    if (k < 2)
        throw PreconditionError("NAE clauses need width k >= 2");
    f.validate_width(k);
    const int n = f.num_vars;
    NaeToUrfc out;
    auto& inst = out.instance;
    inst.graph = Graph(2 * n);
    for (int i = 1; i <= n; ++i)
        inst.graph.add_edge(2 * i - 1, 2 * i);
    inst.q = 2;
    if (variant == NaeVariant::Singletons) {
        inst.block = UrfcBlock{1, k, {}};
        for (const auto& clause : f.clauses) {
            SetTuple t;
            for (int lit : clause)
                t.push_back({literal_vertex(lit)});
            inst.block.tuples.push_back(std::move(t));
        }
    } else {
        inst.block = UrfcBlock{2, k - 1, {}};
        for (const auto& clause : f.clauses) {
            SetTuple t;
            for (std::size_t s = 1; s < clause.size(); ++s)
                t.push_back({literal_vertex(clause[0]), literal_vertex(-clause[s])});
            inst.block.tuples.push_back(std::move(t));
        }
    }
    inst.canonicalize();
    auto& rep = out.report;
    rep.reduction = variant == NaeVariant::Singletons ? "nae_to_urfc_singletons" : "nae_to_urfc_pairs";
    rep.input_parameter = n;
    rep.output_vertices = inst.graph.num_vertices();
    rep.output_parameter = rep.output_vertices;
    rep.multiplier = 2;
    rep.additive = 0;
    rep.counts = {{"tuples", static_cast<long long>(inst.block.tuples.size())}};
    return out;
}

UrfcToHypergraph urfc_to_hypergraph(const UrfcInstance& input)
{
    UrfcInstance inst = input;
    inst.canonicalize();
    inst.validate();
    const int l = inst.block.l;
    const int q = inst.q;
    if (inst.block.d != 1)
        throw PreconditionError("urfc_to_hypergraph needs d = 1");
    if (l < 2 || q < 2)
        throw PreconditionError("urfc_to_hypergraph needs l >= 2 and q >= 2");
    const int n = inst.graph.num_vertices();

    // Step 1: edges of size at most l.
    std::set<std::vector<Vertex>> small;
    for (auto [u, v] : inst.graph.edges())
        small.insert({u, v});
    for (const auto& t : inst.block.tuples) {
        std::vector<Vertex> e;
        for (const auto& s : t)
            e.push_back(s[0]);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        small.insert(std::move(e));
    }

    // Step 2: pad with Z.
    const int zsize = (l - 1) * q;
    std::vector<Vertex> z(static_cast<std::size_t>(zsize));
    for (int i = 0; i < zsize; ++i)
        z[static_cast<std::size_t>(i)] = n + 1 + i;
    std::set<std::vector<Vertex>> edges;
    for_each_subset(z, l, [&](const std::vector<Vertex>& s) { edges.insert(s); });
    const auto z_edges = static_cast<long long>(edges.size());
    long long padded = 0;
    for (const auto& e : small) {
        if (static_cast<int>(e.size()) == l) {
            edges.insert(e);
            continue;
        }
        for_each_subset(z, l - static_cast<int>(e.size()), [&](const std::vector<Vertex>& s) {
            std::vector<Vertex> grown = e;
            grown.insert(grown.end(), s.begin(), s.end());
            edges.insert(std::move(grown)); // Z ids exceed every vertex of e, so this stays sorted
            ++padded;
        });
    }
    UrfcToHypergraph out;
    out.hypergraph.n = n + zsize;
    out.hypergraph.edges.assign(edges.begin(), edges.end());
    auto& rep = out.report;
    rep.reduction = "urfc_to_hypergraph";
    rep.input_parameter = n;
    rep.output_vertices = out.hypergraph.n;
    rep.output_parameter = rep.output_vertices;
    rep.multiplier = 1;
    rep.additive = zsize;
    rep.counts = {{"vertices.z", zsize},
                  {"edges.z", z_edges},
                  {"edges.padded", padded},
                  {"edges", static_cast<long long>(out.hypergraph.edges.size())}};
    return out;
}

} // namespace ccker
