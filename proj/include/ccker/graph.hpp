#pragma once

#include <span>
#include <utility>
#include <vector>

namespace ccker {

/// Vertices are dense 1-based ids.
using Vertex = int;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    /// Appends `count` isolated vertices and returns the id of the first one.
    Vertex add_vertices(int count);
    Vertex add_vertex() { return add_vertices(1); }

    /// Throws on loops or out-of-range ids; returns false if the edge already exists.
    bool add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 1 && v <= num_vertices(); }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// G[subset]; subset[i] becomes vertex i+1.
    Graph induced(std::span<const Vertex> subset) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

/// Complete graph on n vertices.
Graph complete_graph(int n);

} // namespace ccker
