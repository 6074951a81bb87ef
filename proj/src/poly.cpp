#include "ccker/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ccker/errors.hpp"

namespace ccker {

Monomial Monomial::of(std::span<const Var> vars)
{
    if (vars.size() > static_cast<std::size_t>(kMaxMonomialDegree))
        throw PreconditionError("monomial degree " + std::to_string(vars.size()) + " exceeds " +
                                std::to_string(kMaxMonomialDegree));
    Monomial m;
    std::copy(vars.begin(), vars.end(), m.v_.begin());
    m.deg_ = static_cast<std::uint8_t>(vars.size());
    std::sort(m.v_.begin(), m.v_.begin() + m.deg_);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (deg_ + other.deg_ > kMaxMonomialDegree)
        throw PreconditionError("monomial degree exceeds " + std::to_string(kMaxMonomialDegree));
    Monomial m;
    std::merge(v_.begin(), v_.begin() + deg_, other.v_.begin(), other.v_.begin() + other.deg_, m.v_.begin());
    m.deg_ = static_cast<std::uint8_t>(deg_ + other.deg_);
    return m;
}

std::size_t Monomial::hash() const noexcept
{
    std::uint64_t h = 1469598103934665603ULL ^ deg_;
    for (int i = 0; i < deg_; ++i) {
        h ^= v_[static_cast<std::size_t>(i)];
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept
{
    if (a.degree() != b.degree())
        return a.degree() > b.degree();
    auto va = a.vars();
    auto vb = b.vars();
    for (std::size_t i = 0; i < va.size(); ++i)
        if (va[i] != vb[i])
            return va[i] < vb[i];
    return false;
}

SparsePoly SparsePoly::from_terms(PrimeField field, int num_vars, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
    SparsePoly out(field, num_vars);
    for (const auto& t : terms) {
        for (Var v : t.mono.vars())
            if (v >= num_vars)
                throw PreconditionError("variable " + std::to_string(v) + " outside a space of " +
                                        std::to_string(num_vars));
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
            out.terms_.back().coeff = field.add(out.terms_.back().coeff, t.coeff % field.modulus());
        else
            out.terms_.push_back({t.mono, t.coeff % field.modulus()});
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coeff == 0; });
    return out;
}

SparsePoly SparsePoly::constant(PrimeField field, int num_vars, PrimeField::Elem c)
{
    return from_terms(field, num_vars, {Term{Monomial{}, c}});
}

SparsePoly SparsePoly::variable(PrimeField field, int num_vars, int var)
{
    Var v = static_cast<Var>(var);
    if (var < 0 || var >= num_vars)
        throw PreconditionError("variable " + std::to_string(var) + " out of range");
    return from_terms(field, num_vars, {Term{Monomial::of({&v, 1}), 1}});
}

int SparsePoly::degree() const noexcept
{
    // Terms are sorted by decreasing degree.
    return terms_.empty() ? -1 : terms_.front().mono.degree();
}

PrimeField::Elem SparsePoly::evaluate(std::span<const PrimeField::Elem> point) const
{
    if (point.size() != static_cast<std::size_t>(num_vars_))
        throw PreconditionError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(num_vars_));
    PrimeField::Elem sum = 0;
    for (const auto& t : terms_) {
        PrimeField::Elem prod = t.coeff;
        for (Var v : t.mono.vars())
            prod = field_.mul(prod, point[v] % field_.modulus());
        sum = field_.add(sum, prod);
    }
    return sum;
}

void SparsePoly::check_compatible(const SparsePoly& other) const
{
    if (!(field_ == other.field_) || num_vars_ != other.num_vars_)
        throw PreconditionError("polynomials over different fields or variable spaces");
}

SparsePoly SparsePoly::combine(const SparsePoly& other, bool subtract) const
{
    check_compatible(other);
    SparsePoly out(field_, num_vars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    auto take_b = [&](const Term& t) { return Term{t.mono, subtract ? field_.neg(t.coeff) : t.coeff}; };
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && grlex_greater(a->mono, b->mono))) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || grlex_greater(b->mono, a->mono)) {
            out.terms_.push_back(take_b(*b++));
        } else {
            auto c = subtract ? field_.sub(a->coeff, b->coeff) : field_.add(a->coeff, b->coeff);
            if (c != 0)
                out.terms_.push_back({a->mono, c});
            ++a;
            ++b;
        }
    }
    return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const
{
    return combine(other, false);
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const
{
    return combine(other, true);
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const
{
    check_compatible(other);
    std::unordered_map<Monomial, PrimeField::Elem, MonomialHash> acc;
    for (const auto& x : terms_)
        for (const auto& y : other.terms_) {
            auto& c = acc[x.mono * y.mono];
            c = field_.add(c, field_.mul(x.coeff, y.coeff));
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (const auto& [m, c] : acc)
        terms.push_back({m, c});
    return from_terms(field_, num_vars_, std::move(terms));
}

SparsePoly SparsePoly::scaled(PrimeField::Elem c) const
{
    SparsePoly out(field_, num_vars_);
    c %= field_.modulus();
    if (c == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coeff = field_.mul(t.coeff, c);
    return out;
}

SparsePoly SparsePoly::rename(std::span<const int> var_map, int num_vars) const
{
    if (var_map.size() != static_cast<std::size_t>(num_vars_))
        throw PreconditionError("variable map covers " + std::to_string(var_map.size()) + " of " +
                                std::to_string(num_vars_) + " variables");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    std::array<Var, kMaxMonomialDegree> buf{};
    for (const auto& t : terms_) {
        auto vars = t.mono.vars();
        for (std::size_t i = 0; i < vars.size(); ++i)
            buf[i] = static_cast<Var>(var_map[vars[i]]);
        terms.push_back({Monomial::of({buf.data(), vars.size()}), t.coeff});
    }
    return from_terms(field_, num_vars, std::move(terms));
}

SparsePoly SparsePoly::without_term(std::size_t index) const
{
    SparsePoly out = *this;
    if (index < out.terms_.size())
        out.terms_.erase(out.terms_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& matrix)
{
    const std::size_t t = matrix.size();
    if (t == 0)
        throw PreconditionError("determinant of an empty matrix");
    for (const auto& row : matrix)
        if (row.size() != t)
            throw PreconditionError("determinant of a non-square matrix");
    const PrimeField& f = matrix[0][0].field();
    const int nv = matrix[0][0].num_vars();
    SparsePoly sum(f, nv);
    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        SparsePoly prod = SparsePoly::constant(f, nv, inversions % 2 == 0 ? 1 : f.neg(1));
        for (std::size_t i = 0; i < t && !prod.is_zero(); ++i)
            prod = prod * matrix[i][perm[i]];
        sum = sum + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

} // namespace ccker
