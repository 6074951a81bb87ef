#pragma once

// Seeded instance generators. All randomness comes from std::mt19937_64, whose
// output sequence is fixed by the standard; integers are drawn by rejection
// sampling and probabilities by comparing 53-bit draws, so a seed yields the
// same instance on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "ccker/instances.hpp"

namespace ccker {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    int uniform(int lo, int hi);
    /// True with probability p (clamped to [0,1]).
    bool chance(double p);
    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

Graph random_graph(int n, double edge_density, Rng& rng);

/// Every canonical l-tuple of d-subsets of [n], in canonical order.
std::vector<SetTuple> all_urfc_tuples(int n, int d, int l);

/// Each canonical tuple is kept with probability `tuple_density` when there are
/// at most 10^6 of them; otherwise density·total random tuples are drawn.
UrfcInstance random_urfc(int n, int d, int l, int q, double tuple_density, double edge_density, Rng& rng);

GurfcInstance random_gurfc(int n, int q, const std::vector<std::pair<int, int>>& shapes, double tuple_density,
                           double edge_density, Rng& rng);

/// m clauses of k distinct variables with random signs.
CnfFormula random_cnf(int num_vars, int k, int num_clauses, Rng& rng);

/// Random G[X] on k vertices plus `num_cliques` cliques of 1..max_clique
/// vertices, each joined to X vertices with probability `cross_density`.
/// The modulator is a random k-subset of the shuffled vertex ids.
CliqueKvInstance random_cliquekv(int k, int num_cliques, int max_clique, double edge_density, double cross_density,
                                 Rng& rng);

/// Random constraints over `rel`; lists keep each color with probability `list_density`.
RclcInstance random_rclc(int n, std::shared_ptr<const Relation> rel, int num_constraints, double edge_density,
                         double list_density, Rng& rng);
RccInstance random_rcc(int n, std::shared_ptr<const Relation> rel, int num_constraints, double edge_density, Rng& rng);

Hypergraph random_hypergraph(int n, int l, int num_edges, Rng& rng);

} // namespace ccker
