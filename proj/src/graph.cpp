#include "ccker/graph.hpp"

#include <algorithm>
#include <string>

#include "ccker/errors.hpp"

namespace ccker {

Graph::Graph(int n)
{
    if (n < 0)
        throw PreconditionError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Vertex Graph::add_vertices(int count)
{
    if (count < 0)
        throw PreconditionError("negative vertex count");
    Vertex first = num_vertices() + 1;
    adj_.resize(adj_.size() + static_cast<std::size_t>(count));
    return first;
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    if (!contains(u) || !contains(v))
        throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 1.." +
                                std::to_string(num_vertices()));
    if (u == v)
        throw PreconditionError("loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u - 1)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v - 1)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
    return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v))
        return false;
    const auto& nu = adj_[static_cast<std::size_t>(u - 1)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    if (!contains(v))
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v - 1)];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges_);
    for (Vertex u = 1; u <= num_vertices(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u - 1)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> subset) const
{
    std::vector<int> index(adj_.size() + 1, 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (!contains(subset[i]))
            throw PreconditionError("vertex " + std::to_string(subset[i]) + " out of range");
        if (index[static_cast<std::size_t>(subset[i])] != 0)
            throw PreconditionError("vertex " + std::to_string(subset[i]) + " repeated in subset");
        index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i) + 1;
    }
    Graph h(static_cast<int>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (Vertex w : neighbors(subset[i]))
            if (int j = index[static_cast<std::size_t>(w)]; j != 0 && static_cast<int>(i) + 1 < j)
                h.add_edge(static_cast<int>(i) + 1, j);
    return h;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

} // namespace ccker
