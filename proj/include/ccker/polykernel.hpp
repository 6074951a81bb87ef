#pragma once

// Kernels for uniformly-rainbow-free coloring via polynomial bases over GF(p),
// and the product-pruning kernel for constrained coloring.
//
// Variables of a capture polynomial form an m × (d·l) matrix; entry (row i,
// column c), both 0-based, is variable c·m + i. When a tuple is instantiated,
// column c becomes the vector of the c-th vertex v in the flattened tuple and
// entry i becomes variable (v-1)·m + i.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccker/instances.hpp"
#include "ccker/poly.hpp"

namespace ccker {

using FieldVector = std::vector<PrimeField::Elem>;

/// The q vectors (1, a, a^2, ..., a^(m-1)) for a = 0, 1, ..., q-1.
std::vector<FieldVector> vandermonde_set(int m, int q, const PrimeField& field);

/// p_{m,t}: determinant of the first t rows of an m × t variable matrix after
/// replacing the first row by ones. Degree t-1.
SparsePoly det_poly(int m, int t, const PrimeField& field);

struct CapturePair {
    PrimeField field;
    int d;
    int l;
    int q;
    int m;
    int item;         // which construction, 1..3
    int degree_bound; // d-1, (d-1)l or dl-1
    std::vector<FieldVector> colors;
    SparsePoly poly;
};

/// Constructions that apply to (d, l, q): 1 if l = 1, 2 if q = d, 3 if q = d+1.
std::vector<int> capture_items(int d, int l, int q);

/// item 0 picks the first applicable construction in the order 1, 2, 3.
/// Throws PreconditionError if the requested item does not apply or the field
/// has fewer than q elements.
CapturePair build_capture(int d, int l, int q, const PrimeField& field, int item = 0);

/// Evaluates cp.poly on all q^(dl) C-colored matrices and compares nonzeroness
/// with uniform rainbowness. Budget: Limits::relation_tuples.
bool check_captures(const CapturePair& cp, int d, int l, int q, const Limits& limits = {});

/// binom(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct KernelMeta {
    std::string method; // "dedup", "poly" or "decided"
    std::uint32_t field = 0;
    int capture_item = 0;
    std::size_t input_tuples = 0;
    std::size_t basis_size = 0;
    std::uint64_t bound = 0;
    std::optional<bool> decided;
};

/// key=value pairs for output headers and reports.
std::vector<std::pair<std::string, std::string>> describe(const KernelMeta& meta);

/// Keeps, in canonical order, each tuple whose instantiated polynomial is not in
/// the span of the polynomials kept so far.
UrfcInstance kernelize_poly(const UrfcInstance& inst, const CapturePair& cp, KernelMeta* meta = nullptr);

struct UrfcKernel {
    UrfcInstance instance;
    KernelMeta meta;
};

/// Dispatch on eta(d,l,q). When eta = 0 the instance is decided outright and a
/// constant equivalent instance is returned: one vertex and no tuples for YES,
/// K_{q+1} for NO.
UrfcKernel kernelize_urfc(const UrfcInstance& inst);

struct GurfcKernel {
    GurfcInstance instance;
    std::vector<KernelMeta> blocks;
    /// |E| + sum of the per-block bounds.
    std::uint64_t bound = 0;
};

/// Kernelizes each block separately; every block needs eta >= 2.
GurfcKernel kernelize_gurfc(const GurfcInstance& inst);

/// Deduplicates F, then removes the lexicographically last tuple of every full
/// product {x_1,y_1} × ... × {x_r,y_r} contained in F. Requires r >= 3.
RccInstance kernelize_carbonnel(const RccInstance& inst);

} // namespace ccker
