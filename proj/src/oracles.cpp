#include "ccker/oracles.hpp"

#include <algorithm>
#include <string>

namespace ccker {

bool SolutionSet::contains(const Coloring& c) const
{
    return std::binary_search(colorings.begin(), colorings.end(), c);
}

namespace {

struct Problem {
    int n = 0;
    int q = 0;
    const Graph* graph = nullptr;
    const ListAssignment* lists = nullptr;
    std::vector<std::vector<Vertex>> scopes;
};

/// Greedy maximum-cardinality order on the primal graph (edges plus constraint
/// scopes), so that constraints close early. Ties prefer short lists, then high
/// degree, then low id.
std::vector<Vertex> search_order(const Problem& p)
{
    const auto n = static_cast<std::size_t>(p.n);
    std::vector<std::vector<Vertex>> primal(n + 1);
    for (Vertex v = 1; v <= p.n; ++v)
        for (Vertex w : p.graph->neighbors(v))
            primal[static_cast<std::size_t>(v)].push_back(w);
    for (const auto& s : p.scopes)
        for (Vertex a : s)
            for (Vertex b : s)
                if (a != b)
                    primal[static_cast<std::size_t>(a)].push_back(b);
    for (auto& adj : primal) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    auto list_size = [&](Vertex v) {
        return p.lists ? p.lists->list(v).size() : static_cast<std::size_t>(p.q);
    };
    std::vector<int> score(n + 1, 0);
    std::vector<char> placed(n + 1, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        for (Vertex v = 1; v <= p.n; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (placed[uv])
                continue;
            if (best == 0) {
                best = v;
                continue;
            }
            const auto ub = static_cast<std::size_t>(best);
            if (score[uv] != score[ub]) {
                if (score[uv] > score[ub])
                    best = v;
                continue;
            }
            if (list_size(v) != list_size(best)) {
                if (list_size(v) < list_size(best))
                    best = v;
                continue;
            }
            if (primal[uv].size() > primal[ub].size())
                best = v;
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (Vertex w : primal[static_cast<std::size_t>(best)])
            ++score[static_cast<std::size_t>(w)];
    }
    return order;
}

template <class Check>
class Searcher {
public:
    Searcher(const Problem& p, Check check, std::size_t max_solutions, const Limits& limits)
        : p_(p), check_(std::move(check)), max_solutions_(max_solutions), budget_(limits.search_space)
    {
        order_ = search_order(p);
        const auto n = static_cast<std::size_t>(p.n);
        std::vector<std::size_t> pos(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(order_[i])] = i;
        back_neighbors_.resize(n);
        due_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (Vertex w : p.graph->neighbors(order_[i]))
                if (pos[static_cast<std::size_t>(w)] < i)
                    back_neighbors_[i].push_back(w);
        for (std::size_t k = 0; k < p.scopes.size(); ++k) {
            std::size_t last = 0;
            for (Vertex v : p.scopes[k])
                last = std::max(last, pos[static_cast<std::size_t>(v)]);
            due_[last].push_back(k);
        }
        candidates_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (p.lists) {
                auto l = p.lists->list(order_[i]);
                candidates_[i].assign(l.begin(), l.end());
            } else {
                for (Color c = 1; c <= p.q; ++c)
                    candidates_[i].push_back(c);
            }
        }
        coloring_.assign(n, 0);
    }

    SolutionSet run()
    {
        SolutionSet out;
        out.q = p_.q;
        if (max_solutions_ > 0) {
            // Constraints with no vertices cannot occur (arity >= 1), so the
            // empty coloring of an empty graph is always a solution.
            dfs(0, out);
        }
        std::sort(out.colorings.begin(), out.colorings.end());
        return out;
    }

private:
    bool dfs(std::size_t i, SolutionSet& out)
    {
        if (i == order_.size()) {
            out.colorings.push_back(coloring_);
            return out.colorings.size() < max_solutions_;
        }
        const auto v = static_cast<std::size_t>(order_[i] - 1);
        for (Color c : candidates_[i]) {
            if (++nodes_ > budget_)
                throw BudgetExceeded("search passed " + std::to_string(budget_) + " nodes");
            bool ok = true;
            for (Vertex w : back_neighbors_[i])
                if (coloring_[static_cast<std::size_t>(w - 1)] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            coloring_[v] = c;
            for (std::size_t k : due_[i])
                if (!check_(k, coloring_)) {
                    ok = false;
                    break;
                }
            if (ok && !dfs(i + 1, out)) {
                coloring_[v] = 0;
                return false;
            }
            coloring_[v] = 0;
        }
        return true;
    }

    const Problem& p_;
    Check check_;
    std::size_t max_solutions_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> back_neighbors_;
    std::vector<std::vector<std::size_t>> due_;
    std::vector<std::vector<Color>> candidates_;
    Coloring coloring_;
};

template <class Check>
SolutionSet search(const Problem& p, Check check, std::size_t max_solutions, const Limits& limits)
{
    return Searcher<Check>(p, std::move(check), max_solutions, limits).run();
}

bool rel_holds(const Relation& rel, const std::vector<Vertex>& scope, const Coloring& c, std::vector<int>& buf)
{
    buf.resize(scope.size());
    for (std::size_t j = 0; j < scope.size(); ++j)
        buf[j] = c[static_cast<std::size_t>(scope[j] - 1)];
    return rel.contains(buf);
}

std::vector<Vertex> flatten(const SetTuple& t)
{
    std::vector<Vertex> out;
    for (const auto& s : t)
        out.insert(out.end(), s.begin(), s.end());
    return out;
}

void check_coloring_size(int n, const Coloring& c)
{
    if (c.size() != static_cast<std::size_t>(n))
        throw PreconditionError("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(n) +
                                " vertices");
}

} // namespace

bool is_uniformly_rainbow(const SetTuple& tuple, const Coloring& c)
{
    std::vector<Color> first;
    std::vector<Color> colors;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        colors.clear();
        for (Vertex v : tuple[i])
            colors.push_back(c[static_cast<std::size_t>(v - 1)]);
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
            return false;
        if (i == 0)
            first = colors;
        else if (colors != first)
            return false;
    }
    return true;
}

SolutionSet solve_rcc(const RccInstance& inst, std::size_t max_solutions, const Limits& limits)
{
    inst.validate();
    Problem p{inst.graph.num_vertices(), inst.relation->q(), &inst.graph, nullptr, inst.constraints};
    const Relation& rel = *inst.relation;
    std::vector<int> buf;
    return search(
        p, [&](std::size_t k, const Coloring& c) { return rel_holds(rel, inst.constraints[k], c, buf); },
        max_solutions, limits);
}

SolutionSet solve_rclc(const RclcInstance& inst, std::size_t max_solutions, const Limits& limits)
{
    inst.validate();
    Problem p{inst.graph.num_vertices(), inst.relation->q(), &inst.graph, &inst.lists, inst.constraints};
    const Relation& rel = *inst.relation;
    std::vector<int> buf;
    return search(
        p, [&](std::size_t k, const Coloring& c) { return rel_holds(rel, inst.constraints[k], c, buf); },
        max_solutions, limits);
}

SolutionSet solve_urfc(const GurfcInstance& inst, std::size_t max_solutions, const Limits& limits)
{
    inst.validate();
    std::vector<const SetTuple*> tuples;
    Problem p{inst.graph.num_vertices(), inst.q, &inst.graph, nullptr, {}};
    for (const auto& b : inst.blocks)
        for (const auto& t : b.tuples) {
            tuples.push_back(&t);
            p.scopes.push_back(flatten(t));
        }
    return search(
        p, [&](std::size_t k, const Coloring& c) { return !is_uniformly_rainbow(*tuples[k], c); }, max_solutions,
        limits);
}

SolutionSet solve_urfc(const UrfcInstance& inst, std::size_t max_solutions, const Limits& limits)
{
    return solve_urfc(GurfcInstance{inst.graph, inst.q, {inst.block}}, max_solutions, limits);
}

SolutionSet solve_hypergraph_qcol(const Hypergraph& h, int q, std::size_t max_solutions, const Limits& limits)
{
    if (q < 1)
        throw PreconditionError("q must be positive");
    Graph empty(h.n);
    Problem p{h.n, q, &empty, nullptr, h.edges};
    return search(
        p,
        [&](std::size_t k, const Coloring& c) {
            const auto& e = h.edges[k];
            const Color first = c[static_cast<std::size_t>(e.front() - 1)];
            return std::any_of(e.begin(), e.end(),
                               [&](Vertex v) { return c[static_cast<std::size_t>(v - 1)] != first; });
        },
        max_solutions, limits);
}

SolutionSet solve_graph_qcol(const Graph& g, int q, std::size_t max_solutions, const Limits& limits)
{
    if (q < 1)
        throw PreconditionError("q must be positive");
    Problem p{g.num_vertices(), q, &g, nullptr, {}};
    return search(p, [](std::size_t, const Coloring&) { return true; }, max_solutions, limits);
}

std::vector<Assignment> solve_cnf(const CnfFormula& f, CnfMode mode, const Limits& limits)
{
    f.validate();
    if (f.num_vars >= 64 || (std::uint64_t{1} << f.num_vars) > limits.search_space)
        throw BudgetExceeded("2^" + std::to_string(f.num_vars) + " assignments exceed the search budget");
    const auto n = static_cast<std::size_t>(f.num_vars);
    std::vector<Assignment> out;
    Assignment a(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        // x_1 is the most significant bit, so codes enumerate in lexicographic order.
        for (std::size_t i = 0; i < n; ++i)
            a[i] = (code >> (n - 1 - i)) & 1U;
        if (satisfies(f, mode, a))
            out.push_back(a);
    }
    return out;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    check_coloring_size(g.num_vertices(), c);
    for (auto [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u - 1)] == c[static_cast<std::size_t>(v - 1)])
            return false;
    return true;
}

namespace {
bool in_range(const Coloring& c, int q)
{
    return std::all_of(c.begin(), c.end(), [q](Color x) { return x >= 1 && x <= q; });
}
} // namespace

bool satisfies(const RccInstance& inst, const Coloring& c)
{
    if (!is_proper(inst.graph, c) || !in_range(c, inst.relation->q()))
        return false;
    std::vector<int> buf;
    return std::all_of(inst.constraints.begin(), inst.constraints.end(),
                       [&](const auto& s) { return rel_holds(*inst.relation, s, c, buf); });
}

bool satisfies(const RclcInstance& inst, const Coloring& c)
{
    if (!satisfies(RccInstance{inst.graph, inst.relation, inst.constraints}, c))
        return false;
    for (Vertex v = 1; v <= inst.graph.num_vertices(); ++v)
        if (!inst.lists.allows(v, c[static_cast<std::size_t>(v - 1)]))
            return false;
    return true;
}

bool satisfies(const GurfcInstance& inst, const Coloring& c)
{
    if (!is_proper(inst.graph, c) || !in_range(c, inst.q))
        return false;
    for (const auto& b : inst.blocks)
        for (const auto& t : b.tuples)
            if (is_uniformly_rainbow(t, c))
                return false;
    return true;
}

bool satisfies(const UrfcInstance& inst, const Coloring& c)
{
    return satisfies(GurfcInstance{inst.graph, inst.q, {inst.block}}, c);
}

bool satisfies(const Hypergraph& h, const Coloring& c)
{
    check_coloring_size(h.n, c);
    for (const auto& e : h.edges) {
        const Color first = c[static_cast<std::size_t>(e.front() - 1)];
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return c[static_cast<std::size_t>(v - 1)] == first; }))
            return false;
    }
    return true;
}

bool satisfies(const CnfFormula& f, CnfMode mode, const Assignment& a)
{
    if (a.size() != static_cast<std::size_t>(f.num_vars))
        throw PreconditionError("assignment size differs from the variable count");
    for (const auto& clause : f.clauses) {
        bool some_true = false;
        bool some_false = false;
        for (int lit : clause) {
            bool value = a[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
            (value ? some_true : some_false) = true;
        }
        if (!some_true || (mode == CnfMode::Nae && !some_false))
            return false;
    }
    return true;
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<Color>>& options, std::vector<int>& owner,
             std::vector<char>& visited)
{
    for (Color col : options[u]) {
        const auto k = static_cast<std::size_t>(col);
        if (visited[k])
            continue;
        visited[k] = 1;
        if (owner[k] < 0 || augment(static_cast<std::size_t>(owner[k]), options, owner, visited)) {
            owner[k] = static_cast<int>(u);
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Coloring> extend_to_cliques(const CliqueKvInstance& inst, int q, const Coloring& c)
{
    const Graph& g = inst.graph;
    check_coloring_size(g.num_vertices(), c);
    for (Vertex x : inst.modulator) {
        Color cx = c[static_cast<std::size_t>(x - 1)];
        if (cx < 1 || cx > q)
            throw PreconditionError("modulator vertex " + std::to_string(x) + " has color outside 1.." +
                                    std::to_string(q));
        for (Vertex w : g.neighbors(x))
            if (w < x && inst.in_modulator(w) && c[static_cast<std::size_t>(w - 1)] == cx)
                throw PreconditionError("coloring is not proper on G[X]: edge " + std::to_string(w) + "-" +
                                        std::to_string(x));
    }
    Coloring out(c.size(), 0);
    for (Vertex x : inst.modulator)
        out[static_cast<std::size_t>(x - 1)] = c[static_cast<std::size_t>(x - 1)];
    for (const auto& clique : inst.cliques) {
        std::vector<std::vector<Color>> options(clique.size());
        for (std::size_t i = 0; i < clique.size(); ++i) {
            std::vector<char> blocked(static_cast<std::size_t>(q) + 1, 0);
            for (Vertex w : g.neighbors(clique[i]))
                if (inst.in_modulator(w))
                    blocked[static_cast<std::size_t>(c[static_cast<std::size_t>(w - 1)])] = 1;
            for (Color col = 1; col <= q; ++col)
                if (!blocked[static_cast<std::size_t>(col)])
                    options[i].push_back(col);
        }
        std::vector<int> owner(static_cast<std::size_t>(q) + 1, -1);
        for (std::size_t i = 0; i < clique.size(); ++i) {
            std::vector<char> visited(static_cast<std::size_t>(q) + 1, 0);
            if (!augment(i, options, owner, visited))
                return std::nullopt;
        }
        for (Color col = 1; col <= q; ++col)
            if (int i = owner[static_cast<std::size_t>(col)]; i >= 0)
                out[static_cast<std::size_t>(clique[static_cast<std::size_t>(i)] - 1)] = col;
    }
    return out;
}

} // namespace ccker
