#include "ccker/random_instances.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "ccker/polykernel.hpp"

namespace ccker {

int Rng::uniform(int lo, int hi)
{
    if (lo > hi)
        throw PreconditionError("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(static_cast<long long>(hi) - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return static_cast<int>(lo + static_cast<long long>(x % span));
}

bool Rng::chance(double p)
{
    if (p <= 0)
        return false;
    if (p >= 1)
        return true;
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

std::vector<Vertex> random_subset(int n, int size, Rng& rng)
{
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i + 1;
    // Partial Fisher-Yates.
    for (int i = 0; i < size; ++i)
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(rng.uniform(i, n - 1))]);
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

void all_subsets(int n, int d, std::vector<VertexSet>& out)
{
    VertexSet cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (d - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

} // namespace

Graph random_graph(int n, double edge_density, Rng& rng)
{
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.chance(edge_density))
                g.add_edge(u, v);
    return g;
}

std::vector<SetTuple> all_urfc_tuples(int n, int d, int l)
{
    std::vector<VertexSet> sets;
    all_subsets(n, d, sets);
    std::vector<SetTuple> out;
    SetTuple cur;
    // Multisets of l sets: nondecreasing index sequences, which are already canonical.
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == l) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < sets.size(); ++i) {
            cur.push_back(sets[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

UrfcInstance random_urfc(int n, int d, int l, int q, double tuple_density, double edge_density, Rng& rng)
{
    check_shape(d, l, q);
    if (n < d)
        throw PreconditionError("n must be at least d");
    UrfcInstance inst{random_graph(n, edge_density, rng), q, UrfcBlock{d, l, {}}};
    const std::uint64_t sets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
    const std::uint64_t total = binomial(sets + static_cast<std::uint64_t>(l) - 1, static_cast<std::uint64_t>(l));
    if (total <= 1'000'000) {
        for (auto& t : all_urfc_tuples(n, d, l))
            if (rng.chance(tuple_density))
                inst.block.tuples.push_back(std::move(t));
        return inst;
    }
    const auto draws = static_cast<std::uint64_t>(std::min(1e6, std::max(0.0, tuple_density) * static_cast<double>(total)));
    for (std::uint64_t i = 0; i < draws; ++i) {
        SetTuple t;
        for (int j = 0; j < l; ++j)
            t.push_back(random_subset(n, d, rng));
        inst.block.tuples.push_back(std::move(t));
    }
    inst.canonicalize();
    return inst;
}

GurfcInstance random_gurfc(int n, int q, const std::vector<std::pair<int, int>>& shapes, double tuple_density,
                           double edge_density, Rng& rng)
{
    GurfcInstance inst{random_graph(n, edge_density, rng), q, {}};
    for (auto [d, l] : shapes) {
        auto one = random_urfc(n, d, l, q, tuple_density, 0.0, rng);
        inst.blocks.push_back(std::move(one.block));
    }
    inst.canonicalize();
    return inst;
}

CnfFormula random_cnf(int num_vars, int k, int num_clauses, Rng& rng)
{
    if (k < 1 || k > num_vars)
        throw PreconditionError("clause width must lie in 1..n");
    CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
        auto vars = random_subset(num_vars, k, rng);
        rng.shuffle(vars);
        std::vector<int> clause;
        for (int v : vars)
            clause.push_back(rng.chance(0.5) ? v : -v);
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

CliqueKvInstance random_cliquekv(int k, int num_cliques, int max_clique, double edge_density, double cross_density,
                                 Rng& rng)
{
    if (k < 0 || num_cliques < 0 || max_clique < 1)
        throw PreconditionError("bad clique-modulator parameters");
    std::vector<int> sizes;
    int total = k;
    for (int i = 0; i < num_cliques; ++i) {
        sizes.push_back(rng.uniform(1, max_clique));
        total += sizes.back();
    }
    // Shuffle ids so X is not always a prefix.
    std::vector<Vertex> ids(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        ids[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(ids);
    Graph g(total);
    std::vector<Vertex> x(ids.begin(), ids.begin() + k);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (rng.chance(edge_density))
                g.add_edge(x[a], x[b]);
    std::size_t next = static_cast<std::size_t>(k);
    for (int s : sizes) {
        std::vector<Vertex> clique(ids.begin() + static_cast<std::ptrdiff_t>(next),
                                   ids.begin() + static_cast<std::ptrdiff_t>(next) + s);
        next += static_cast<std::size_t>(s);
        for (std::size_t a = 0; a < clique.size(); ++a) {
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                g.add_edge(clique[a], clique[b]);
            for (Vertex xv : x)
                if (rng.chance(cross_density))
                    g.add_edge(clique[a], xv);
        }
    }
    return CliqueKvInstance::make(std::move(g), std::move(x));
}

RclcInstance random_rclc(int n, std::shared_ptr<const Relation> rel, int num_constraints, double edge_density,
                         double list_density, Rng& rng)
{
    auto base = random_rcc(n, rel, num_constraints, edge_density, rng);
    ListAssignment lists(rel->q(), n);
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Color> l;
        for (Color c = 1; c <= rel->q(); ++c)
            if (rng.chance(list_density))
                l.push_back(c);
        lists.set(v, std::move(l));
    }
    return RclcInstance{std::move(base.graph), std::move(lists), std::move(rel), std::move(base.constraints)};
}

RccInstance random_rcc(int n, std::shared_ptr<const Relation> rel, int num_constraints, double edge_density, Rng& rng)
{
    if (!rel)
        throw PreconditionError("no relation");
    if (n < 1 && num_constraints > 0)
        throw PreconditionError("constraints need at least one vertex");
    RccInstance inst{random_graph(n, edge_density, rng), rel, {}};
    for (int i = 0; i < num_constraints; ++i) {
        std::vector<Vertex> c;
        for (int j = 0; j < rel->r(); ++j)
            c.push_back(rng.uniform(1, n));
        inst.constraints.push_back(std::move(c));
    }
    return inst;
}

Hypergraph random_hypergraph(int n, int l, int num_edges, Rng& rng)
{
    if (l < 1 || l > n)
        throw PreconditionError("edge size must lie in 1..n");
    Hypergraph h;
    h.n = n;
    std::set<std::vector<Vertex>> seen;
    for (int i = 0; i < num_edges; ++i) {
        auto e = random_subset(n, l, rng);
        if (seen.insert(e).second)
            h.edges.push_back(std::move(e));
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

} // namespace ccker
