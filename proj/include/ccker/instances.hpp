#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ccker/graph.hpp"
#include "ccker/relation.hpp"

namespace ccker {

using Color = int;

/// Per-vertex color lists over [q]. Empty lists are legal.
class ListAssignment {
public:
    ListAssignment() = default;
    /// Every vertex gets the full list [q].
    ListAssignment(int q, int n);

    int q() const noexcept { return q_; }
    int num_vertices() const noexcept { return static_cast<int>(lists_.size()); }

    void set(Vertex v, std::vector<Color> list);
    /// Appends a vertex with the given list and returns its id.
    Vertex add_vertex(std::vector<Color> list);
    std::span<const Color> list(Vertex v) const;
    bool allows(Vertex v, Color c) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    int q_ = 0;
    std::vector<std::vector<Color>> lists_;
};

/// (G, F) with F ⊆ V^r; the relation is shared since relations can be large.
struct RccInstance {
    Graph graph;
    std::shared_ptr<const Relation> relation;
    std::vector<std::vector<Vertex>> constraints;

    std::size_t constraint_count() const { return graph.num_edges() + constraints.size(); }
    void validate() const;
};

struct RclcInstance {
    Graph graph;
    ListAssignment lists;
    std::shared_ptr<const Relation> relation;
    std::vector<std::vector<Vertex>> constraints;

    std::size_t constraint_count() const { return graph.num_edges() + constraints.size(); }
    void validate() const;
};

/// A d-subset of vertices, sorted ascending.
using VertexSet = std::vector<Vertex>;
/// An l-tuple of d-subsets.
using SetTuple = std::vector<VertexSet>;

/// Sorts each set and orders the sets lexicographically. Throws when a set does
/// not have exactly d distinct vertices.
SetTuple canonicalize_urfc_tuple(SetTuple tuple, int d);

/// The constraints of one shape (d, l).
struct UrfcBlock {
    int d = 1;
    int l = 1;
    std::vector<SetTuple> tuples;

    /// Canonicalizes every tuple, then sorts and deduplicates.
    void canonicalize();
    bool is_canonical() const;

    friend bool operator==(const UrfcBlock&, const UrfcBlock&) = default;
};

struct UrfcInstance {
    Graph graph;
    int q = 1;
    UrfcBlock block;

    void validate() const;
    void canonicalize() { block.canonicalize(); }

    friend bool operator==(const UrfcInstance&, const UrfcInstance&) = default;
};

struct GurfcInstance {
    Graph graph;
    int q = 1;
    std::vector<UrfcBlock> blocks;

    void validate() const;
    /// Canonicalizes blocks, merges blocks of equal shape, orders blocks by (d, l).
    void canonicalize();
    std::size_t num_tuples() const;

    friend bool operator==(const GurfcInstance&, const GurfcInstance&) = default;
};

/// Components of G \ X, each checked to be a clique, sorted by smallest vertex.
/// With `max_size`, components larger than it are rejected as well.
std::vector<std::vector<Vertex>> validate_clique_kv(const Graph& g, std::span<const Vertex> modulator,
                                                    std::optional<int> max_size = std::nullopt);

/// A graph with modulator X such that G \ X is a disjoint union of cliques.
struct CliqueKvInstance {
    Graph graph;
    std::vector<Vertex> modulator; // sorted
    std::vector<std::vector<Vertex>> cliques;

    /// Validates G \ X and records its clique partition.
    static CliqueKvInstance make(Graph g, std::vector<Vertex> modulator);

    int k() const noexcept { return static_cast<int>(modulator.size()); }
    std::size_t max_clique_size() const;
    bool in_modulator(Vertex v) const;

    friend bool operator==(const CliqueKvInstance&, const CliqueKvInstance&) = default;
};

struct Hypergraph {
    int n = 0;
    std::vector<std::vector<Vertex>> edges; // each sorted

    /// Sorts the edge; throws on an empty edge, a repeated vertex, or an id outside
    /// 1..n; returns false for a duplicate edge.
    bool add_edge(std::vector<Vertex> edge);
    bool is_uniform(std::size_t l) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// CNF over variables 1..num_vars; literal v is x_v, -v its negation.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Literals in range, distinct variables within each clause.
    void validate() const;
    /// Also requires every clause to have exactly k literals.
    void validate_width(int k) const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

} // namespace ccker
