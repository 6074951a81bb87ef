#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccker/instances.hpp"
#include "ccker/oracles.hpp"
#include "ccker/polykernel.hpp"

namespace ccker {

/// Bookkeeping for a transformation. A linear-parameter reduction satisfies
/// output_parameter <= multiplier * input_parameter + additive.
struct ReductionReport {
    std::string reduction;
    long long input_parameter = 0;
    long long output_vertices = 0;
    long long output_parameter = 0;
    long long multiplier = 0;
    long long additive = 0;
    std::vector<std::pair<std::string, long long>> counts;

    /// One key=value pair per line.
    std::string to_text() const;
    bool within_linear_bound() const { return output_parameter <= multiplier * input_parameter + additive; }
};

/// Attaches a path from u1 to u2 whose list-colorings exist iff
/// (c(u1), c(u2)) != (a1, a2). Returns the number of vertices added (2 or 3).
int add_forbid_pair_gadget(Graph& g, ListAssignment& lists, Vertex u1, Vertex u2, Color a1, Color a2);

std::pair<Graph, ListAssignment> forbid_pair_gadget(Graph g, ListAssignment lists, Vertex u1, Vertex u2, Color a1,
                                                    Color a2);

struct SatToRclc {
    RclcInstance instance;
    ReductionReport report;
    OrWitness witness;
    int num_vars = 0;
};

/// k-SAT with k = w.k to R-CLC. Vertex t_{i,j_s} (s 0-based) is
/// 2((i-1)k + s) + 1 and f_{i,j_s} is the next id; the r-k vertices v_j follow,
/// then the gadget vertices.
SatToRclc sat_to_rclc(const CnfFormula& f, std::shared_ptr<const Relation> rel, const OrWitness& w);

/// x_i is true iff t_{i,j_1} has color beta_{j_1}.
Assignment decode_assignment(const SatToRclc& red, const Coloring& c);

struct RclcToRcc {
    RccInstance instance;
    ReductionReport report;
};

/// Adds a palette clique z_1..z_q (ids n+1..n+q) and joins v to z_i for i not in L(v).
RclcToRcc rclc_to_rcc(const RclcInstance& inst);

enum class NaeVariant { Singletons, Pairs };

struct NaeToUrfc {
    UrfcInstance instance;
    ReductionReport report;
};

/// Literal x_i is vertex 2i-1 and its negation 2i; q = 2, color 1 means true.
/// Every clause must have exactly k >= 2 literals.
NaeToUrfc nae_to_urfc(const CnfFormula& f, int k, NaeVariant variant);

struct UrfcToHypergraph {
    Hypergraph hypergraph;
    ReductionReport report;
};

/// (1,l,q)-URFC to q-coloring of an l-uniform hypergraph; Z has ids n+1..n+(l-1)q.
UrfcToHypergraph urfc_to_hypergraph(const UrfcInstance& inst);

struct CliqueConstraints {
    /// On G[X], with X relabeled 1..k in increasing order.
    GurfcInstance instance;
    ReductionReport report;
};

/// Blocks (q-l+1, l) for l in [t]. Throws if a clique of G \ X exceeds t.
CliqueConstraints extract_clique_constraints(const CliqueKvInstance& inst, int q, int t);

struct GurfcToCliqueKv {
    CliqueKvInstance instance;
    ReductionReport report;
};

/// X = V(G); one fresh l-clique per tuple, its i-th vertex joined to F_i.
GurfcToCliqueKv gurfc_to_cliquekv(const GurfcInstance& inst);

struct CliqueKvKernel {
    CliqueKvInstance instance;
    ReductionReport report;
    GurfcKernel kernel;
    int t = 0;
    int r = 0;
    /// Set when a clique larger than q decided the instance.
    bool decided_no = false;
};

/// Without t, a clique larger than q yields the constant NO instance K_{q+1}
/// (with X = all of it); otherwise t = q.
CliqueKvKernel kernelize_cliquekv(const CliqueKvInstance& inst, int q, std::optional<int> t = std::nullopt);

} // namespace ccker
