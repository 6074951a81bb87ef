#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ccker/errors.hpp"

namespace ccker {

/// Domain values are 1..q.
using Tuple = std::vector<int>;

/// Explicit relation R ⊆ [q]^r. Tuples are kept as their lexicographic rank in
/// [q]^r, sorted and deduplicated, so iteration order is lexicographic.
class Relation {
public:
    Relation(int q, int r, std::vector<Tuple> tuples, const Limits& limits = {});

    /// All tuples of [q]^r satisfying `member`, enumerated in lexicographic order.
    static Relation from_predicate(int q, int r, const std::function<bool(std::span<const int>)>& member,
                                   const Limits& limits = {});
    static Relation full(int q, int r, const Limits& limits = {});

    int q() const noexcept { return q_; }
    int r() const noexcept { return r_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }

    bool contains(std::span<const int> tuple) const;
    bool contains_code(std::uint64_t code) const;

    std::vector<Tuple> tuples() const;
    std::span<const std::uint64_t> codes() const noexcept { return codes_; }

    /// Number of tuples in [q]^r.
    std::uint64_t universe_size() const noexcept { return universe_; }
    std::uint64_t encode(std::span<const int> tuple) const;
    Tuple decode(std::uint64_t code) const;
    /// Weight of position j in the code, q^(r-1-j).
    std::uint64_t place_value(int position) const { return place_[static_cast<std::size_t>(position)]; }

    friend bool operator==(const Relation& a, const Relation& b)
    {
        return a.q_ == b.q_ && a.r_ == b.r_ && a.codes_ == b.codes_;
    }

private:
    Relation(int q, int r);

    int q_;
    int r_;
    std::uint64_t universe_;
    std::vector<std::uint64_t> place_;
    std::vector<std::uint64_t> codes_;
};

/// Witness that an OR relation of arity k is definable: on positions in J the
/// domain is {alpha_j, beta_j}, elsewhere {alpha_j}; every product tuple except
/// alpha itself belongs to the relation. Positions are 0-based.
struct OrWitness {
    int k = 0;
    std::vector<int> positions;
    Tuple alpha;
    std::vector<int> beta; // aligned with positions

    friend bool operator==(const OrWitness&, const OrWitness&) = default;
};

/// Checks the 2^k product tuples against a membership predicate.
bool witness_holds(const OrWitness& w, int q, int r, const std::function<bool(std::span<const int>)>& member);
bool witness_holds(const OrWitness& w, const Relation& rel);

bool is_permutation_invariant(const Relation& rel, int factorial_cap = 8);

/// First witness in lexicographic order of (J, alpha, beta), or nullopt.
std::optional<OrWitness> find_or_witness(const Relation& rel, int k, const Limits& limits = {});

/// Largest k with a witness, 0 if none.
int max_or_arity(const Relation& rel, const Limits& limits = {});

struct UrfcShape {
    int d;
    int l;
    int q;
};

void check_shape(int d, int l, int q);

/// Membership in UR_{d,l}^q for a column-major d×l matrix: every column has d
/// distinct values and all columns hold the same value set.
bool is_uniformly_rainbow_matrix(std::span<const int> matrix, int d, int l);

/// NUR_{d,l}^q: the complement of UR_{d,l}^q in [q]^(d·l). Position (i,j) (1-based)
/// is stored at index (j-1)·d + i - 1.
Relation make_nur(int d, int l, int q, const Limits& limits = {});

/// The explicit witnesses for NUR: item 1 (arity dl, l >= 2, q >= d+2), item 2
/// (arity dl-1, q >= d+1), item 3 (arity (d-1)l, q >= d).
OrWitness nur_or_witness(int d, int l, int q, int item);

/// Which of the five exponent cases applies.
enum class EtaCase {
    Full,          // l >= 2, q >= d+2: dl
    OneExtraColor, // l >= 2, q = d+1, (d,l) != (1,2): dl-1
    Tight,         // (l >= 2, q = d >= 2) or (l = 1, d >= 3): (d-1)l
    Quadratic,     // l = 1, d <= 2, q >= 3: 2
    Polynomial,    // (q = 2, dl <= 2) or q = 1: 0
};

EtaCase eta_case(int d, int l, int q);
int eta(int d, int l, int q);

/// max over l in [t] of eta(q-l+1, l, q).
int r_clique(int q, int t);
/// Closed form of r_clique.
int r_clique_closed_form(int q, int t);

} // namespace ccker
