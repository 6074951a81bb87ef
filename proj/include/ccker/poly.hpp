#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ccker/field.hpp"

namespace ccker {

constexpr int kMaxMonomialDegree = 16;
using Var = std::uint16_t;

/// Product of variables, stored as the sorted multiset of variable indices.
class Monomial {
public:
    Monomial() = default;
    /// Throws PreconditionError above kMaxMonomialDegree.
    static Monomial of(std::span<const Var> vars);

    int degree() const noexcept { return deg_; }
    std::span<const Var> vars() const noexcept { return {v_.data(), deg_}; }
    Monomial operator*(const Monomial& other) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<Var, kMaxMonomialDegree> v_{};
    std::uint8_t deg_ = 0;
};

/// Graded lexicographic order with x_0 > x_1 > ...: higher degree first, then
/// the larger exponent on the first variable where the two differ.
bool grlex_greater(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial mono;
    PrimeField::Elem coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over GF(p) with terms sorted in decreasing graded-lex order and no
/// zero coefficients.
class SparsePoly {
public:
    SparsePoly(PrimeField field, int num_vars) : field_(field), num_vars_(num_vars) {}

    /// Sorts, merges equal monomials, drops zeros.
    static SparsePoly from_terms(PrimeField field, int num_vars, std::vector<Term> terms);
    static SparsePoly constant(PrimeField field, int num_vars, PrimeField::Elem c);
    static SparsePoly variable(PrimeField field, int num_vars, int var);

    const PrimeField& field() const noexcept { return field_; }
    int num_vars() const noexcept { return num_vars_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept;

    PrimeField::Elem evaluate(std::span<const PrimeField::Elem> point) const;

    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-(const SparsePoly& other) const;
    SparsePoly operator*(const SparsePoly& other) const;
    SparsePoly scaled(PrimeField::Elem c) const;

    /// Substitutes variable i by variable var_map[i] in a space of `num_vars` variables.
    SparsePoly rename(std::span<const int> var_map, int num_vars) const;

    /// Copy with the term at `index` removed. For mutation tests.
    SparsePoly without_term(std::size_t index) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b)
    {
        return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

private:
    SparsePoly combine(const SparsePoly& other, bool subtract) const;
    void check_compatible(const SparsePoly& other) const;

    PrimeField field_;
    int num_vars_;
    std::vector<Term> terms_;
};

/// Leibniz expansion of a square matrix of polynomials.
SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& matrix);

} // namespace ccker
