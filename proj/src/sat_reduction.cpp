#include "ccker/reductions.hpp"

#include <string>

namespace ccker {

SatToRclc sat_to_rclc(const CnfFormula& f, std::shared_ptr<const Relation> rel, const OrWitness& w)
{
    if (!rel)
        throw PreconditionError("no relation");
    const int q = rel->q();
    const int r = rel->r();
    const int k = w.k;
    if (k < 3)
        throw PreconditionError("the witness arity must be at least 3");
    if (q < 3)
        throw PreconditionError("the relation domain needs q >= 3 for the gadgets");
    if (static_cast<int>(w.positions.size()) != k || static_cast<int>(w.alpha.size()) != r || !witness_holds(w, *rel))
        throw PreconditionError("the OR witness does not hold for the relation");
    f.validate_width(k);

    const int n = f.num_vars;
    const int base = 2 * n * k;
    SatToRclc out;
    out.witness = w;
    out.num_vars = n;
    Graph g(base + (r - k));
    ListAssignment lists(q, base + (r - k));
    auto t_vertex = [k](int i, int s) { return 2 * ((i - 1) * k + s) + 1; };

    for (int i = 1; i <= n; ++i)
        for (int s = 0; s < k; ++s) {
            const auto j = static_cast<std::size_t>(w.positions[static_cast<std::size_t>(s)]);
            std::vector<Color> domain{w.alpha[j], w.beta[static_cast<std::size_t>(s)]};
            Vertex t = t_vertex(i, s);
            g.add_edge(t, t + 1);
            lists.set(t, domain);
            lists.set(t + 1, domain);
        }
    std::vector<Vertex> v_of(static_cast<std::size_t>(r), 0);
    {
        Vertex next = base + 1;
        std::size_t s = 0;
        for (int j = 0; j < r; ++j) {
            if (s < w.positions.size() && w.positions[s] == j) {
                ++s;
                continue;
            }
            v_of[static_cast<std::size_t>(j)] = next;
            lists.set(next, {w.alpha[static_cast<std::size_t>(j)]});
            ++next;
        }
    }

    long long distinct = 0;
    long long equal = 0;
    for (int i = 1; i <= n; ++i)
        for (int s = 0; s + 1 < k; ++s) {
            const auto js = static_cast<std::size_t>(w.positions[static_cast<std::size_t>(s)]);
            const auto jn = static_cast<std::size_t>(w.positions[static_cast<std::size_t>(s + 1)]);
            const Color alpha_s = w.alpha[js];
            const Color beta_s = w.beta[static_cast<std::size_t>(s)];
            const Color alpha_n = w.alpha[jn];
            const Color beta_n = w.beta[static_cast<std::size_t>(s + 1)];
            for (auto [a1, a2] : {std::pair{alpha_s, beta_n}, std::pair{beta_s, alpha_n}}) {
                if (add_forbid_pair_gadget(g, lists, t_vertex(i, s), t_vertex(i, s + 1), a1, a2) == 2)
                    ++distinct;
                else
                    ++equal;
            }
        }

    std::vector<std::vector<Vertex>> constraints;
    for (const auto& clause : f.clauses) {
        std::vector<Vertex> z = v_of;
        for (int s = 0; s < k; ++s) {
            int lit = clause[static_cast<std::size_t>(s)];
            Vertex t = t_vertex(std::abs(lit), s);
            z[static_cast<std::size_t>(w.positions[static_cast<std::size_t>(s)])] = lit > 0 ? t : t + 1;
        }
        constraints.push_back(std::move(z));
    }

    out.instance = RclcInstance{std::move(g), std::move(lists), std::move(rel), std::move(constraints)};
    auto& rep = out.report;
    rep.reduction = "sat_to_rclc";
    rep.input_parameter = n;
    rep.output_vertices = out.instance.graph.num_vertices();
    rep.output_parameter = rep.output_vertices;
    rep.multiplier = 2LL * k + 6LL * (k - 1);
    rep.additive = r - k;
    rep.counts = {{"vertices.literal", base},
                  {"vertices.fixed", r - k},
                  {"gadget.path3", distinct},
                  {"gadget.path4", equal},
                  {"constraints", static_cast<long long>(out.instance.constraints.size())}};
    return out;
}

Assignment decode_assignment(const SatToRclc& red, const Coloring& c)
{
    const int k = red.witness.k;
    const Color beta = red.witness.beta.at(0);
    Assignment a(static_cast<std::size_t>(red.num_vars));
    for (int i = 1; i <= red.num_vars; ++i)
        a[static_cast<std::size_t>(i - 1)] = c.at(static_cast<std::size_t>(2 * (i - 1) * k)) == beta;
    return a;
}

RclcToRcc rclc_to_rcc(const RclcInstance& inst)
{
    inst.validate();
    if (!is_permutation_invariant(*inst.relation))
        throw PreconditionError("the relation is not permutation-invariant");
    const int q = inst.relation->q();
    const int n = inst.graph.num_vertices();
    RclcToRcc out;
    Graph g = inst.graph;
    const Vertex z1 = g.add_vertices(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            g.add_edge(z1 + a, z1 + b);
    long long palette_edges = 0;
    for (Vertex v = 1; v <= n; ++v)
        for (Color i = 1; i <= q; ++i)
            if (!inst.lists.allows(v, i)) {
                g.add_edge(v, z1 + i - 1);
                ++palette_edges;
            }
    out.instance = RccInstance{std::move(g), inst.relation, inst.constraints};
    auto& rep = out.report;
    rep.reduction = "rclc_to_rcc";
    rep.input_parameter = n;
    rep.output_vertices = out.instance.graph.num_vertices();
    rep.output_parameter = rep.output_vertices;
    rep.multiplier = 1;
    rep.additive = q;
    rep.counts = {{"vertices.palette", q}, {"edges.palette", palette_edges}};
    return out;
}

} // namespace ccker
