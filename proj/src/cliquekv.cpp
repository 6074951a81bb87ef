#include "ccker/reductions.hpp"

#include <algorithm>
#include <string>

namespace ccker {

namespace {

/// All `size`-subsets of `pool` in lexicographic order.
std::vector<std::vector<Vertex>> subsets(const std::vector<Vertex>& pool, int size)
{
    std::vector<std::vector<Vertex>> out;
    if (size < 0 || static_cast<std::size_t>(size) > pool.size())
        return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    while (true) {
        std::vector<Vertex> s;
        for (auto i : idx)
            s.push_back(pool[i]);
        out.push_back(std::move(s));
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool.size() - static_cast<std::size_t>(size - pos))
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (auto i = static_cast<std::size_t>(pos) + 1; i < idx.size(); ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return out;
}

void check_q_t(int q, int t)
{
    if (q < 1 || t < 1 || t > q)
        throw PreconditionError("need 1 <= t <= q");
}

} // namespace

CliqueConstraints extract_clique_constraints(const CliqueKvInstance& inst, int q, int t)
{
    check_q_t(q, t);
    auto cliques = validate_clique_kv(inst.graph, inst.modulator, t);
    const auto& x = inst.modulator;
    const int k = static_cast<int>(x.size());
    std::vector<Vertex> relabel(static_cast<std::size_t>(inst.graph.num_vertices()) + 1, 0);
    for (int i = 0; i < k; ++i)
        relabel[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i + 1;

    CliqueConstraints out;
    auto& g = out.instance;
    g.graph = inst.graph.induced(x);
    g.q = q;
    for (int l = 1; l <= t; ++l)
        g.blocks.push_back(UrfcBlock{q - l + 1, l, {}});

    long long emitted = 0;
    for (const auto& clique : cliques) {
        for (int l = 1; l <= std::min<int>(t, static_cast<int>(clique.size())); ++l) {
            const int d = q - l + 1;
            auto& block = g.blocks[static_cast<std::size_t>(l - 1)];
            for (const auto& vs : subsets(clique, l)) {
                // Candidate sets F_i for each v_i, over relabeled X.
                std::vector<std::vector<std::vector<Vertex>>> options;
                for (Vertex v : vs) {
                    std::vector<Vertex> nx;
                    for (Vertex w : inst.graph.neighbors(v))
                        if (relabel[static_cast<std::size_t>(w)] != 0)
                            nx.push_back(relabel[static_cast<std::size_t>(w)]);
                    std::sort(nx.begin(), nx.end());
                    options.push_back(subsets(nx, d));
                }
                if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); }))
                    continue;
                std::vector<std::size_t> pick(options.size(), 0);
                while (true) {
                    SetTuple tuple;
                    for (std::size_t i = 0; i < pick.size(); ++i)
                        tuple.push_back(options[i][pick[i]]);
                    block.tuples.push_back(std::move(tuple));
                    ++emitted;
                    std::size_t pos = pick.size();
                    while (pos > 0 && pick[pos - 1] + 1 == options[pos - 1].size())
                        pick[--pos] = 0;
                    if (pos == 0)
                        break;
                    ++pick[pos - 1];
                }
            }
        }
    }
    g.canonicalize();
    auto& rep = out.report;
    rep.reduction = "extract_clique_constraints";
    rep.input_parameter = k;
    rep.output_vertices = k;
    rep.output_parameter = k;
    rep.multiplier = 1;
    rep.additive = 0;
    rep.counts = {{"tuples.emitted", emitted}, {"tuples", static_cast<long long>(g.num_tuples())}};
    return out;
}

namespace {

Graph attach_cliques(Graph g, const GurfcInstance& inst, long long& added)
{
    added = 0;
    for (const auto& b : inst.blocks)
        for (const auto& tuple : b.tuples) {
            const Vertex first = g.add_vertices(b.l);
            added += b.l;
            for (int i = 0; i < b.l; ++i) {
                for (int j = i + 1; j < b.l; ++j)
                    g.add_edge(first + i, first + j);
                for (Vertex f : tuple[static_cast<std::size_t>(i)])
                    g.add_edge(first + i, f);
            }
        }
    return g;
}

void check_modulator_shapes(const GurfcInstance& inst)
{
    for (const auto& b : inst.blocks)
        if (b.d != inst.q - b.l + 1 || b.l > inst.q)
            throw PreconditionError("block (d,l)=(" + std::to_string(b.d) + "," + std::to_string(b.l) +
                                    ") is not of the form (q-l+1, l) at q=" + std::to_string(inst.q));
}

std::vector<Vertex> first_ids(int k)
{
    std::vector<Vertex> x(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        x[static_cast<std::size_t>(i)] = i + 1;
    return x;
}

} // namespace

GurfcToCliqueKv gurfc_to_cliquekv(const GurfcInstance& input)
{
    GurfcInstance inst = input;
    inst.canonicalize();
    inst.validate();
    check_modulator_shapes(inst);
    const int n = inst.graph.num_vertices();
    long long added = 0;
    Graph g = attach_cliques(inst.graph, inst, added);
    GurfcToCliqueKv out{CliqueKvInstance::make(std::move(g), first_ids(n)), {}};
    auto& rep = out.report;
    rep.reduction = "gurfc_to_cliquekv";
    rep.input_parameter = n;
    rep.output_vertices = out.instance.graph.num_vertices();
    rep.output_parameter = out.instance.k();
    rep.multiplier = 1;
    rep.additive = 0;
    rep.counts = {{"cliques", static_cast<long long>(inst.num_tuples())}, {"vertices.clique", added}};
    return out;
}

CliqueKvKernel kernelize_cliquekv(const CliqueKvInstance& inst, int q, std::optional<int> t)
{
    if (q < 3)
        throw PreconditionError("kernelize_cliquekv needs q >= 3");
    CliqueKvKernel out;
    const int k = inst.k();
    auto& rep = out.report;
    rep.reduction = "kernelize_cliquekv";
    rep.input_parameter = k;
    if (!t) {
        if (inst.max_clique_size() > static_cast<std::size_t>(q)) {
            out.decided_no = true;
            out.t = q;
            out.r = r_clique(q, q);
            out.instance = CliqueKvInstance::make(complete_graph(q + 1), first_ids(q + 1));
            rep.output_vertices = q + 1;
            rep.output_parameter = q + 1;
            rep.counts = {{"decided", 0}};
            return out;
        }
        t = q;
    }
    check_q_t(q, *t);
    out.t = *t;
    out.r = r_clique(q, *t);
    auto extracted = extract_clique_constraints(inst, q, *t);
    out.kernel = kernelize_gurfc(extracted.instance);
    long long added = 0;
    Graph g = attach_cliques(out.kernel.instance.graph, out.kernel.instance, added);
    out.instance = CliqueKvInstance::make(std::move(g), first_ids(k));
    rep.output_vertices = out.instance.graph.num_vertices();
    rep.output_parameter = k;
    rep.counts = {{"tuples.extracted", static_cast<long long>(extracted.instance.num_tuples())},
                  {"tuples.kept", static_cast<long long>(out.kernel.instance.num_tuples())},
                  {"vertices.clique", added},
                  {"r", out.r}};
    return out;
}

} // namespace ccker
