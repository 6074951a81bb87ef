#include "ccker/polykernel.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "ccker/relation.hpp"

namespace ccker {

std::vector<std::pair<std::string, std::string>> describe(const KernelMeta& meta)
{
    std::vector<std::pair<std::string, std::string>> out{{"kernel", meta.method}};
    if (meta.field != 0)
        out.emplace_back("field", std::to_string(meta.field));
    if (meta.capture_item != 0)
        out.emplace_back("capture_item", std::to_string(meta.capture_item));
    out.emplace_back("input_tuples", std::to_string(meta.input_tuples));
    out.emplace_back("basis_size", std::to_string(meta.basis_size));
    out.emplace_back("bound", std::to_string(meta.bound));
    if (meta.decided)
        out.emplace_back("decided", *meta.decided ? "YES" : "NO");
    return out;
}

namespace {

/// Row-echelon basis with pairwise distinct leading monomials, each row monic.
class EchelonBasis {
public:
    explicit EchelonBasis(PrimeField f) : f_(f) {}

    /// Reduces `poly`; adds the remainder and returns true iff it is nonzero.
    bool insert(std::vector<Term> rem)
    {
        while (!rem.empty()) {
            auto it = pivot_.find(rem.front().mono);
            if (it == pivot_.end()) {
                auto scale = f_.inv(rem.front().coeff);
                for (auto& t : rem)
                    t.coeff = f_.mul(t.coeff, scale);
                pivot_.emplace(rem.front().mono, rows_.size());
                rows_.push_back(std::move(rem));
                return true;
            }
            rem = subtract_scaled(rem, rows_[it->second], rem.front().coeff);
        }
        return false;
    }

private:
    std::vector<Term> subtract_scaled(const std::vector<Term>& a, const std::vector<Term>& b, PrimeField::Elem c) const
    {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        auto x = a.begin();
        auto y = b.begin();
        while (x != a.end() || y != b.end()) {
            if (y == b.end() || (x != a.end() && grlex_greater(x->mono, y->mono))) {
                out.push_back(*x++);
            } else if (x == a.end() || grlex_greater(y->mono, x->mono)) {
                out.push_back({y->mono, f_.neg(f_.mul(c, y->coeff))});
                ++y;
            } else {
                auto v = f_.sub(x->coeff, f_.mul(c, y->coeff));
                if (v != 0)
                    out.push_back({x->mono, v});
                ++x;
                ++y;
            }
        }
        return out;
    }

    PrimeField f_;
    std::vector<std::vector<Term>> rows_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
};

std::uint64_t dedup_bound(int n, int d, int l)
{
    // Canonical tuples are multisets of l sets drawn from the binom(n,d) d-subsets.
    std::uint64_t sets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
    if (sets == 0)
        return 0;
    if (sets > UINT64_MAX - static_cast<std::uint64_t>(l))
        return UINT64_MAX;
    return binomial(sets + static_cast<std::uint64_t>(l) - 1, static_cast<std::uint64_t>(l));
}

bool two_colorable(int n, const std::vector<std::vector<int>>& adj)
{
    std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : adj[static_cast<std::size_t>(u)]) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> adjacency(const Graph& g)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.num_vertices()) + 1);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

/// The eta = 0 shapes: q = 1, or q = 2 with dl <= 2.
bool decide_degenerate(const UrfcInstance& inst)
{
    const auto& b = inst.block;
    const int n = inst.graph.num_vertices();
    if (inst.q == 1) // every tuple is uniformly rainbow, every edge is violated
        return inst.graph.num_edges() == 0 && b.tuples.empty();
    auto adj = adjacency(inst.graph);
    if (b.d == 1 && b.l == 1)
        return b.tuples.empty() && two_colorable(n, adj);
    if (b.d == 1 && b.l == 2) {
        // ({u},{v}) is uniformly rainbow iff c(u) = c(v): an extra edge.
        for (const auto& t : b.tuples) {
            Vertex u = t[0][0];
            Vertex v = t[1][0];
            if (u == v)
                return false;
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        return two_colorable(n, adj);
    }
    // (2,1): ({u,v}) is uniformly rainbow iff c(u) != c(v): merge u and v.
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& t : b.tuples)
        parent[static_cast<std::size_t>(find(t[0][1]))] = find(t[0][0]);
    std::vector<std::vector<int>> merged(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : inst.graph.edges()) {
        int a = find(u);
        int c = find(v);
        if (a == c)
            return false;
        merged[static_cast<std::size_t>(a)].push_back(c);
        merged[static_cast<std::size_t>(c)].push_back(a);
    }
    return two_colorable(n, merged);
}

UrfcInstance constant_instance(bool yes, const UrfcInstance& like)
{
    UrfcInstance out;
    out.q = like.q;
    out.block = UrfcBlock{like.block.d, like.block.l, {}};
    out.graph = yes ? Graph(1) : complete_graph(like.q + 1);
    return out;
}

} // namespace

UrfcInstance kernelize_poly(const UrfcInstance& input, const CapturePair& cp, KernelMeta* meta)
{
    UrfcInstance inst = input;
    inst.canonicalize();
    inst.validate();
    const auto& b = inst.block;
    if (cp.d != b.d || cp.l != b.l || cp.q != inst.q)
        throw PreconditionError("capture pair is for (" + std::to_string(cp.d) + "," + std::to_string(cp.l) + "," +
                                std::to_string(cp.q) + "), instance has shape (" + std::to_string(b.d) + "," +
                                std::to_string(b.l) + "," + std::to_string(inst.q) + ")");
    const int n = inst.graph.num_vertices();
    const long long num_vars = static_cast<long long>(cp.m) * n;
    if (num_vars > 65535)
        throw PreconditionError("m*n = " + std::to_string(num_vars) + " variables exceed the supported 65535");
    const int width = b.d * b.l;
    std::vector<int> var_map(static_cast<std::size_t>(cp.m * width));
    EchelonBasis basis(cp.field);
    UrfcInstance out{inst.graph, inst.q, UrfcBlock{b.d, b.l, {}}};
    for (const auto& tuple : b.tuples) {
        int c = 0;
        for (const auto& set : tuple)
            for (Vertex v : set) {
                for (int i = 0; i < cp.m; ++i)
                    var_map[static_cast<std::size_t>(c * cp.m + i)] = (v - 1) * cp.m + i;
                ++c;
            }
        SparsePoly pf = cp.poly.rename(var_map, static_cast<int>(num_vars));
        if (basis.insert({pf.terms().begin(), pf.terms().end()}))
            out.block.tuples.push_back(tuple);
    }
    if (meta) {
        meta->method = "poly";
        meta->field = cp.field.modulus();
        meta->capture_item = cp.item;
        meta->input_tuples = b.tuples.size();
        meta->basis_size = out.block.tuples.size();
        meta->bound = binomial(static_cast<std::uint64_t>(num_vars) + static_cast<std::uint64_t>(cp.degree_bound),
                               static_cast<std::uint64_t>(cp.degree_bound));
        meta->decided.reset();
    }
    return out;
}

UrfcKernel kernelize_urfc(const UrfcInstance& input)
{
    UrfcInstance inst = input;
    inst.canonicalize();
    inst.validate();
    const int d = inst.block.d;
    const int l = inst.block.l;
    const int q = inst.q;
    UrfcKernel out;
    switch (eta_case(d, l, q)) {
    case EtaCase::Full:
    case EtaCase::Quadratic:
        out.meta.method = "dedup";
        out.meta.input_tuples = input.block.tuples.size();
        out.meta.basis_size = inst.block.tuples.size();
        out.meta.bound = dedup_bound(inst.graph.num_vertices(), d, l);
        out.instance = std::move(inst);
        return out;
    case EtaCase::OneExtraColor:
    case EtaCase::Tight: {
        int item = l == 1 ? 1 : (q == d ? 2 : 3);
        auto cp = build_capture(d, l, q, PrimeField::at_least(q), item);
        out.instance = kernelize_poly(inst, cp, &out.meta);
        return out;
    }
    case EtaCase::Polynomial:
        break;
    }
    bool yes = decide_degenerate(inst);
    out.meta.method = "decided";
    out.meta.input_tuples = input.block.tuples.size();
    out.meta.decided = yes;
    out.instance = constant_instance(yes, inst);
    out.meta.basis_size = out.instance.block.tuples.size();
    return out;
}

GurfcKernel kernelize_gurfc(const GurfcInstance& input)
{
    GurfcInstance inst = input;
    inst.canonicalize();
    inst.validate();
    for (const auto& b : inst.blocks)
        if (eta(b.d, b.l, inst.q) < 2)
            throw PreconditionError("block (d,l)=(" + std::to_string(b.d) + "," + std::to_string(b.l) +
                                    ") has eta < 2 at q=" + std::to_string(inst.q));
    GurfcKernel out;
    out.instance = GurfcInstance{inst.graph, inst.q, {}};
    out.bound = inst.graph.num_edges();
    for (const auto& b : inst.blocks) {
        auto k = kernelize_urfc(UrfcInstance{inst.graph, inst.q, b});
        out.bound = out.bound > UINT64_MAX - k.meta.bound ? UINT64_MAX : out.bound + k.meta.bound;
        out.blocks.push_back(k.meta);
        out.instance.blocks.push_back(std::move(k.instance.block));
    }
    return out;
}

} // namespace ccker
