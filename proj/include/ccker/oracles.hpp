#pragma once

// Exhaustive solvers. Searches are plain depth-first over colorings in a fixed
// vertex order; a constraint is checked as soon as its last vertex is colored,
// and lists prune candidate colors. `Limits::search_space` caps the number of
// search nodes; exceeding it throws BudgetExceeded.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "ccker/instances.hpp"

namespace ccker {

/// c[v-1] is the color of vertex v.
using Coloring = std::vector<Color>;

struct SolutionSet {
    int q = 0;
    std::vector<Coloring> colorings; // sorted, duplicate-free

    std::size_t size() const noexcept { return colorings.size(); }
    bool empty() const noexcept { return colorings.empty(); }
    bool contains(const Coloring& c) const;

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Stop after this many solutions; 1 turns a solver into a decision procedure.
constexpr std::size_t kAllSolutions = std::numeric_limits<std::size_t>::max();

SolutionSet solve_rcc(const RccInstance& inst, std::size_t max_solutions = kAllSolutions, const Limits& limits = {});
SolutionSet solve_rclc(const RclcInstance& inst, std::size_t max_solutions = kAllSolutions, const Limits& limits = {});
SolutionSet solve_urfc(const UrfcInstance& inst, std::size_t max_solutions = kAllSolutions, const Limits& limits = {});
SolutionSet solve_urfc(const GurfcInstance& inst, std::size_t max_solutions = kAllSolutions, const Limits& limits = {});
SolutionSet solve_hypergraph_qcol(const Hypergraph& h, int q, std::size_t max_solutions = kAllSolutions,
                                  const Limits& limits = {});
/// Proper q-colorings of a plain graph.
SolutionSet solve_graph_qcol(const Graph& g, int q, std::size_t max_solutions = kAllSolutions, const Limits& limits = {});

enum class CnfMode { Sat, Nae };

/// a[i-1] is the value of x_i. Sorted with false < true.
using Assignment = std::vector<bool>;

/// Enumerates all 2^n assignments; throws BudgetExceeded when 2^n passes the budget.
std::vector<Assignment> solve_cnf(const CnfFormula& f, CnfMode mode, const Limits& limits = {});

// Direct predicates, independent of the search.
bool is_proper(const Graph& g, const Coloring& c);
bool satisfies(const RccInstance& inst, const Coloring& c);
bool satisfies(const RclcInstance& inst, const Coloring& c);
/// No tuple uniformly rainbow and c proper.
bool satisfies(const UrfcInstance& inst, const Coloring& c);
bool satisfies(const GurfcInstance& inst, const Coloring& c);
bool satisfies(const Hypergraph& h, const Coloring& c);
bool satisfies(const CnfFormula& f, CnfMode mode, const Assignment& a);
bool is_uniformly_rainbow(const SetTuple& tuple, const Coloring& c);

/// Extends a coloring of X to a proper q-coloring of G, one clique at a time,
/// by bipartite matching of clique vertices to the colors their X-neighbors
/// leave free. Entries of `c` outside X are ignored. Absent iff some clique has
/// no saturating matching.
std::optional<Coloring> extend_to_cliques(const CliqueKvInstance& inst, int q, const Coloring& c);

} // namespace ccker
