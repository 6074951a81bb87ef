#include "ccker/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace ccker {

ListAssignment::ListAssignment(int q, int n) : q_(q)
{
    if (q < 1 || n < 0)
        throw PreconditionError("list assignment needs q >= 1 and n >= 0");
    std::vector<Color> all(static_cast<std::size_t>(q));
    for (int c = 1; c <= q; ++c)
        all[static_cast<std::size_t>(c - 1)] = c;
    lists_.assign(static_cast<std::size_t>(n), all);
}

namespace {
std::vector<Color> normalized_list(std::vector<Color> list, int q)
{
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (Color c : list)
        if (c < 1 || c > q)
            throw PreconditionError("list color " + std::to_string(c) + " outside 1.." + std::to_string(q));
    return list;
}
} // namespace

void ListAssignment::set(Vertex v, std::vector<Color> list)
{
    if (v < 1 || v > num_vertices())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    lists_[static_cast<std::size_t>(v - 1)] = normalized_list(std::move(list), q_);
}

Vertex ListAssignment::add_vertex(std::vector<Color> list)
{
    lists_.push_back(normalized_list(std::move(list), q_));
    return num_vertices();
}

std::span<const Color> ListAssignment::list(Vertex v) const
{
    if (v < 1 || v > num_vertices())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return lists_[static_cast<std::size_t>(v - 1)];
}

bool ListAssignment::allows(Vertex v, Color c) const
{
    auto l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
}

namespace {

void check_constraints(const Graph& g, const Relation* rel, const std::vector<std::vector<Vertex>>& constraints)
{
    if (rel == nullptr)
        throw PreconditionError("instance has no relation");
    for (const auto& c : constraints) {
        if (c.size() != static_cast<std::size_t>(rel->r()))
            throw PreconditionError("constraint of length " + std::to_string(c.size()) + " for a relation of arity " +
                                    std::to_string(rel->r()));
        for (Vertex v : c)
            if (!g.contains(v))
                throw PreconditionError("constraint vertex " + std::to_string(v) + " out of range");
    }
}

} // namespace

void RccInstance::validate() const
{
    check_constraints(graph, relation.get(), constraints);
}

void RclcInstance::validate() const
{
    check_constraints(graph, relation.get(), constraints);
    if (lists.num_vertices() != graph.num_vertices())
        throw PreconditionError("list assignment covers " + std::to_string(lists.num_vertices()) + " vertices, graph has " +
                                std::to_string(graph.num_vertices()));
    if (lists.q() != relation->q())
        throw PreconditionError("list colors and relation domain differ");
}

SetTuple canonicalize_urfc_tuple(SetTuple tuple, int d)
{
    for (auto& set : tuple) {
        if (set.size() != static_cast<std::size_t>(d))
            throw PreconditionError("set of size " + std::to_string(set.size()) + " in a block with d=" +
                                    std::to_string(d));
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw PreconditionError("repeated vertex inside a set");
    }
    std::sort(tuple.begin(), tuple.end());
    return tuple;
}

void UrfcBlock::canonicalize()
{
    for (auto& t : tuples) {
        if (t.size() != static_cast<std::size_t>(l))
            throw PreconditionError("tuple of length " + std::to_string(t.size()) + " in a block with l=" +
                                    std::to_string(l));
        t = canonicalize_urfc_tuple(std::move(t), d);
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

bool UrfcBlock::is_canonical() const
{
    for (const auto& t : tuples) {
        if (t.size() != static_cast<std::size_t>(l) || !std::is_sorted(t.begin(), t.end()))
            return false;
        for (const auto& s : t)
            if (s.size() != static_cast<std::size_t>(d) || std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) != s.end())
                return false;
    }
    return std::adjacent_find(tuples.begin(), tuples.end(), std::greater_equal<>()) == tuples.end();
}

namespace {

void validate_block(const Graph& g, int q, const UrfcBlock& block)
{
    check_shape(block.d, block.l, q);
    for (const auto& t : block.tuples) {
        if (t.size() != static_cast<std::size_t>(block.l))
            throw PreconditionError("tuple length differs from l=" + std::to_string(block.l));
        for (const auto& s : t) {
            if (s.size() != static_cast<std::size_t>(block.d))
                throw PreconditionError("set size differs from d=" + std::to_string(block.d));
            for (Vertex v : s)
                if (!g.contains(v))
                    throw PreconditionError("tuple vertex " + std::to_string(v) + " out of range");
            std::vector<Vertex> sorted = s;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw PreconditionError("repeated vertex inside a set");
        }
    }
}

} // namespace

void UrfcInstance::validate() const
{
    validate_block(graph, q, block);
}

void GurfcInstance::validate() const
{
    for (const auto& b : blocks)
        validate_block(graph, q, b);
}

void GurfcInstance::canonicalize()
{
    std::map<std::pair<int, int>, UrfcBlock> merged;
    for (auto& b : blocks) {
        auto [it, fresh] = merged.try_emplace({b.d, b.l}, UrfcBlock{b.d, b.l, {}});
        auto& dst = it->second.tuples;
        dst.insert(dst.end(), std::make_move_iterator(b.tuples.begin()), std::make_move_iterator(b.tuples.end()));
    }
    blocks.clear();
    for (auto& [shape, b] : merged) {
        b.canonicalize();
        blocks.push_back(std::move(b));
    }
}

std::size_t GurfcInstance::num_tuples() const
{
    std::size_t total = 0;
    for (const auto& b : blocks)
        total += b.tuples.size();
    return total;
}

std::vector<std::vector<Vertex>> validate_clique_kv(const Graph& g, std::span<const Vertex> modulator,
                                                    std::optional<int> max_size)
{
    const int n = g.num_vertices();
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x : modulator) {
        if (!g.contains(x))
            throw PreconditionError("modulator vertex " + std::to_string(x) + " out of range");
        removed[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex s = 1; s <= n; ++s) {
        if (removed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!removed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j]))
                    throw NotACliqueError(static_cast<std::size_t>(comp.front()), comp[i], comp[j]);
        if (max_size && comp.size() > static_cast<std::size_t>(*max_size))
            throw PreconditionError("clique containing vertex " + std::to_string(comp.front()) + " has size " +
                                    std::to_string(comp.size()) + " > t=" + std::to_string(*max_size));
        cliques.push_back(std::move(comp));
    }
    return cliques;
}

CliqueKvInstance CliqueKvInstance::make(Graph g, std::vector<Vertex> modulator)
{
    std::sort(modulator.begin(), modulator.end());
    if (std::adjacent_find(modulator.begin(), modulator.end()) != modulator.end())
        throw PreconditionError("modulator lists a vertex twice");
    CliqueKvInstance inst;
    inst.cliques = validate_clique_kv(g, modulator);
    inst.graph = std::move(g);
    inst.modulator = std::move(modulator);
    return inst;
}

std::size_t CliqueKvInstance::max_clique_size() const
{
    std::size_t best = 0;
    for (const auto& c : cliques)
        best = std::max(best, c.size());
    return best;
}

bool CliqueKvInstance::in_modulator(Vertex v) const
{
    return std::binary_search(modulator.begin(), modulator.end(), v);
}

bool Hypergraph::add_edge(std::vector<Vertex> edge)
{
    if (edge.empty())
        throw PreconditionError("empty hyperedge");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
        throw PreconditionError("hyperedge repeats a vertex");
    if (edge.front() < 1 || edge.back() > n)
        throw PreconditionError("hyperedge vertex outside 1.." + std::to_string(n));
    if (std::find(edges.begin(), edges.end(), edge) != edges.end())
        return false;
    edges.push_back(std::move(edge));
    return true;
}

bool Hypergraph::is_uniform(std::size_t l) const
{
    return std::all_of(edges.begin(), edges.end(), [l](const auto& e) { return e.size() == l; });
}

void CnfFormula::validate() const
{
    if (num_vars < 0)
        throw PreconditionError("negative variable count");
    for (const auto& clause : clauses) {
        std::vector<int> vars;
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > num_vars)
                throw PreconditionError("literal " + std::to_string(lit) + " outside the " + std::to_string(num_vars) +
                                        " declared variables");
            vars.push_back(std::abs(lit));
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw PreconditionError("clause mentions a variable twice");
    }
}

void CnfFormula::validate_width(int k) const
{
    validate();
    for (const auto& clause : clauses)
        if (clause.size() != static_cast<std::size_t>(k))
            throw PreconditionError("clause of width " + std::to_string(clause.size()) + " in a " + std::to_string(k) +
                                    "-CNF formula");
}

} // namespace ccker
