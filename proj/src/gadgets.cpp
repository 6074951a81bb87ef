#include "ccker/reductions.hpp"

#include <algorithm>
#include <string>

namespace ccker {

std::string ReductionReport::to_text() const
{
    std::string out = "reduction=" + reduction + "\n";
    out += "input_parameter=" + std::to_string(input_parameter) + "\n";
    out += "output_vertices=" + std::to_string(output_vertices) + "\n";
    out += "output_parameter=" + std::to_string(output_parameter) + "\n";
    out += "multiplier=" + std::to_string(multiplier) + "\n";
    out += "additive=" + std::to_string(additive) + "\n";
    for (const auto& [k, v] : counts)
        out += k + "=" + std::to_string(v) + "\n";
    return out;
}

namespace {

/// Smallest colors in [q] avoiding `excluded`.
std::vector<Color> smallest_avoiding(int q, std::initializer_list<Color> excluded, std::size_t count)
{
    std::vector<Color> out;
    for (Color c = 1; c <= q && out.size() < count; ++c)
        if (std::find(excluded.begin(), excluded.end(), c) == excluded.end())
            out.push_back(c);
    return out;
}

} // namespace

int add_forbid_pair_gadget(Graph& g, ListAssignment& lists, Vertex u1, Vertex u2, Color a1, Color a2)
{
    const int q = lists.q();
    if (q < 3)
        throw PreconditionError("the forbid-pair gadget needs q >= 3");
    if (lists.num_vertices() != g.num_vertices())
        throw PreconditionError("list assignment and graph disagree on the vertex count");
    if (!g.contains(u1) || !g.contains(u2) || u1 == u2)
        throw PreconditionError("gadget endpoints must be two distinct vertices");
    if (a1 < 1 || a1 > q || a2 < 1 || a2 > q)
        throw PreconditionError("forbidden colors must lie in 1..q");
    if (a1 != a2) {
        Color beta = smallest_avoiding(q, {a1, a2}, 1)[0];
        Vertex v1 = g.add_vertex();
        Vertex v2 = g.add_vertex();
        lists.add_vertex({a1, beta});
        lists.add_vertex({a2, beta});
        g.add_edge(u1, v1);
        g.add_edge(v1, v2);
        g.add_edge(v2, u2);
        return 2;
    }
    auto bg = smallest_avoiding(q, {a1}, 2);
    const Color alpha = a1;
    const Color beta = bg[0];
    const Color gamma = bg[1];
    Vertex v1 = g.add_vertex();
    Vertex v2 = g.add_vertex();
    Vertex v3 = g.add_vertex();
    lists.add_vertex({alpha, beta});
    lists.add_vertex({beta, gamma});
    lists.add_vertex({alpha, gamma});
    g.add_edge(u1, v1);
    g.add_edge(v1, v2);
    g.add_edge(v2, v3);
    g.add_edge(v3, u2);
    return 3;
}

std::pair<Graph, ListAssignment> forbid_pair_gadget(Graph g, ListAssignment lists, Vertex u1, Vertex u2, Color a1,
                                                    Color a2)
{
    add_forbid_pair_gadget(g, lists, u1, u2, a1, a2);
    return {std::move(g), std::move(lists)};
}

} // namespace ccker
