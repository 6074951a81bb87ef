#include "ccker/relation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace ccker {

Relation::Relation(int q, int r) : q_(q), r_(r)
{
    if (q < 1 || r < 1)
        throw PreconditionError("relation needs q >= 1 and r >= 1");
    universe_ = saturating_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(r));
    if (universe_ > (std::uint64_t{1} << 62))
        throw BudgetExceeded("q^r = " + std::to_string(q) + "^" + std::to_string(r) + " does not fit a tuple code");
    place_.assign(static_cast<std::size_t>(r), 1);
    for (int j = r - 2; j >= 0; --j)
        place_[static_cast<std::size_t>(j)] = place_[static_cast<std::size_t>(j) + 1] * static_cast<std::uint64_t>(q);
}

Relation::Relation(int q, int r, std::vector<Tuple> tuples, const Limits& limits) : Relation(q, r)
{
    if (tuples.size() > limits.relation_tuples)
        throw BudgetExceeded("relation has more than " + std::to_string(limits.relation_tuples) + " tuples");
    codes_.reserve(tuples.size());
    for (const auto& t : tuples)
        codes_.push_back(encode(t));
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

Relation Relation::from_predicate(int q, int r, const std::function<bool(std::span<const int>)>& member,
                                  const Limits& limits)
{
    Relation rel(q, r);
    if (rel.universe_ > limits.relation_tuples)
        throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(r) +
                             " tuples exceeds the budget of " + std::to_string(limits.relation_tuples));
    Tuple t(static_cast<std::size_t>(r), 1);
    for (std::uint64_t code = 0; code < rel.universe_; ++code) {
        if (member(t))
            rel.codes_.push_back(code);
        // odometer increment, last position fastest
        for (int j = r - 1; j >= 0; --j) {
            auto& x = t[static_cast<std::size_t>(j)];
            if (x < q) {
                ++x;
                break;
            }
            x = 1;
        }
    }
    return rel;
}

Relation Relation::full(int q, int r, const Limits& limits)
{
    return from_predicate(q, r, [](std::span<const int>) { return true; }, limits);
}

std::uint64_t Relation::encode(std::span<const int> tuple) const
{
    if (tuple.size() != static_cast<std::size_t>(r_))
        throw PreconditionError("tuple has length " + std::to_string(tuple.size()) + ", expected " +
                                std::to_string(r_));
    std::uint64_t code = 0;
    for (int x : tuple) {
        if (x < 1 || x > q_)
            throw PreconditionError("tuple entry " + std::to_string(x) + " outside 1.." + std::to_string(q_));
        code = code * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(x - 1);
    }
    return code;
}

Tuple Relation::decode(std::uint64_t code) const
{
    Tuple t(static_cast<std::size_t>(r_));
    for (int j = r_ - 1; j >= 0; --j) {
        t[static_cast<std::size_t>(j)] = static_cast<int>(code % static_cast<std::uint64_t>(q_)) + 1;
        code /= static_cast<std::uint64_t>(q_);
    }
    return t;
}

bool Relation::contains_code(std::uint64_t code) const
{
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool Relation::contains(std::span<const int> tuple) const
{
    if (tuple.size() != static_cast<std::size_t>(r_))
        return false;
    for (int x : tuple)
        if (x < 1 || x > q_)
            return false;
    return contains_code(encode(tuple));
}

std::vector<Tuple> Relation::tuples() const
{
    std::vector<Tuple> out;
    out.reserve(codes_.size());
    for (auto c : codes_)
        out.push_back(decode(c));
    return out;
}

bool witness_holds(const OrWitness& w, int q, int r, const std::function<bool(std::span<const int>)>& member)
{
    if (w.k < 0 || w.positions.size() != static_cast<std::size_t>(w.k) || w.beta.size() != w.positions.size() ||
        w.alpha.size() != static_cast<std::size_t>(r))
        return false;
    for (int x : w.alpha)
        if (x < 1 || x > q)
            return false;
    for (std::size_t s = 0; s < w.positions.size(); ++s) {
        int pos = w.positions[s];
        if (pos < 0 || pos >= r || w.beta[s] < 1 || w.beta[s] > q || w.beta[s] == w.alpha[static_cast<std::size_t>(pos)])
            return false;
        if (s > 0 && w.positions[s - 1] >= pos)
            return false;
    }
    if (w.k >= 63)
        return false;
    Tuple t = w.alpha;
    const std::uint64_t total = std::uint64_t{1} << w.k;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t s = 0; s < w.positions.size(); ++s)
            t[static_cast<std::size_t>(w.positions[s])] = (mask >> s) & 1U ? w.beta[s] : w.alpha[static_cast<std::size_t>(w.positions[s])];
        bool in = member(t);
        if (mask == 0 ? in : !in)
            return false;
    }
    return true;
}

bool witness_holds(const OrWitness& w, const Relation& rel)
{
    return witness_holds(w, rel.q(), rel.r(), [&](std::span<const int> t) { return rel.contains(t); });
}

namespace {

bool closed_under(const Relation& rel, const std::vector<int>& perm)
{
    Tuple image(static_cast<std::size_t>(rel.r()));
    for (auto code : rel.codes()) {
        Tuple t = rel.decode(code);
        for (std::size_t j = 0; j < t.size(); ++j)
            image[j] = perm[static_cast<std::size_t>(t[j])];
        if (!rel.contains_code(rel.encode(image)))
            return false;
    }
    return true;
}

} // namespace

bool is_permutation_invariant(const Relation& rel, int factorial_cap)
{
    const int q = rel.q();
    // perm[x] is the image of x; index 0 unused
    std::vector<int> perm(static_cast<std::size_t>(q) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    if (q <= factorial_cap) {
        while (std::next_permutation(perm.begin() + 1, perm.end()))
            if (!closed_under(rel, perm))
                return false;
        return true;
    }
    // transpositions and the q-cycle generate the symmetric group
    for (int a = 1; a <= q; ++a) {
        for (int b = a + 1; b <= q; ++b) {
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            if (!closed_under(rel, perm))
                return false;
        }
    }
    for (int x = 1; x <= q; ++x)
        perm[static_cast<std::size_t>(x)] = x % q + 1;
    return closed_under(rel, perm);
}

namespace {

class WitnessSearch {
public:
    WitnessSearch(const Relation& rel, const Limits& limits) : rel_(rel), limits_(limits) {}

    std::optional<OrWitness> run(int k)
    {
        const int r = rel_.r();
        std::vector<int> positions(static_cast<std::size_t>(k));
        std::iota(positions.begin(), positions.end(), 0);
        while (true) {
            if (auto w = search_positions(positions))
                return w;
            // next k-combination of 0..r-1 in lexicographic order
            int i = k - 1;
            while (i >= 0 && positions[static_cast<std::size_t>(i)] == r - k + i)
                --i;
            if (i < 0)
                return std::nullopt;
            ++positions[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                positions[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j) - 1] + 1;
        }
    }

private:
    std::optional<OrWitness> search_positions(const std::vector<int>& positions)
    {
        // alpha ranges over non-members in lexicographic order
        auto members = rel_.codes();
        std::size_t next_member = 0;
        for (std::uint64_t code = 0; code < rel_.universe_size(); ++code) {
            if (next_member < members.size() && members[next_member] == code) {
                ++next_member;
                continue;
            }
            charge(1);
            alpha_ = rel_.decode(code);
            beta_.assign(positions.size(), 0);
            std::vector<std::uint64_t> product{code};
            if (extend(positions, 0, product)) {
                OrWitness w;
                w.k = static_cast<int>(positions.size());
                w.positions = positions;
                w.alpha = alpha_;
                w.beta = beta_;
                return w;
            }
        }
        return std::nullopt;
    }

    // product holds the codes of the sub-product over the first s positions
    bool extend(const std::vector<int>& positions, std::size_t s, const std::vector<std::uint64_t>& product)
    {
        if (s == positions.size())
            return true;
        const int pos = positions[s];
        const int a = alpha_[static_cast<std::size_t>(pos)];
        const std::uint64_t pv = rel_.place_value(pos);
        std::vector<std::uint64_t> next;
        for (int b = 1; b <= rel_.q(); ++b) {
            if (b == a)
                continue;
            charge(product.size());
            bool ok = true;
            for (auto c : product) {
                std::uint64_t moved = b > a ? c + static_cast<std::uint64_t>(b - a) * pv
                                            : c - static_cast<std::uint64_t>(a - b) * pv;
                if (!rel_.contains_code(moved)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            next = product;
            for (auto c : product)
                next.push_back(b > a ? c + static_cast<std::uint64_t>(b - a) * pv
                                     : c - static_cast<std::uint64_t>(a - b) * pv);
            beta_[s] = b;
            if (extend(positions, s + 1, next))
                return true;
        }
        return false;
    }

    void charge(std::uint64_t work)
    {
        work_ += work;
        if (work_ > limits_.search_space)
            throw BudgetExceeded("OR-witness search exceeded " + std::to_string(limits_.search_space) + " steps");
    }

    const Relation& rel_;
    const Limits& limits_;
    std::uint64_t work_ = 0;
    Tuple alpha_;
    std::vector<int> beta_;
};

} // namespace

std::optional<OrWitness> find_or_witness(const Relation& rel, int k, const Limits& limits)
{
    if (k < 1 || k > rel.r())
        throw PreconditionError("OR arity k=" + std::to_string(k) + " outside 1.." + std::to_string(rel.r()));
    if (rel.universe_size() > limits.relation_tuples)
        throw BudgetExceeded("witness search over " + std::to_string(rel.universe_size()) +
                             " tuples exceeds the budget");
    return WitnessSearch(rel, limits).run(k);
}

int max_or_arity(const Relation& rel, const Limits& limits)
{
    if (rel.universe_size() > limits.relation_tuples)
        throw BudgetExceeded("witness search over " + std::to_string(rel.universe_size()) +
                             " tuples exceeds the budget");
    for (int k = rel.r(); k >= 1; --k)
        if (find_or_witness(rel, k, limits))
            return k;
    return 0;
}

void check_shape(int d, int l, int q)
{
    if (d < 1 || l < 1 || q < d)
        throw PreconditionError("invalid shape (d,l,q)=(" + std::to_string(d) + "," + std::to_string(l) + "," +
                                std::to_string(q) + "): need q >= d >= 1 and l >= 1");
}

bool is_uniformly_rainbow_matrix(std::span<const int> matrix, int d, int l)
{
    auto col = [&](int j) { return matrix.subspan(static_cast<std::size_t>(j * d), static_cast<std::size_t>(d)); };
    std::vector<int> first(col(0).begin(), col(0).end());
    std::sort(first.begin(), first.end());
    if (std::adjacent_find(first.begin(), first.end()) != first.end())
        return false;
    std::vector<int> other;
    for (int j = 1; j < l; ++j) {
        other.assign(col(j).begin(), col(j).end());
        std::sort(other.begin(), other.end());
        if (other != first)
            return false;
    }
    return true;
}

Relation make_nur(int d, int l, int q, const Limits& limits)
{
    check_shape(d, l, q);
    return Relation::from_predicate(
        q, d * l, [d, l](std::span<const int> m) { return !is_uniformly_rainbow_matrix(m, d, l); }, limits);
}

OrWitness nur_or_witness(int d, int l, int q, int item)
{
    check_shape(d, l, q);
    auto index = [d](int i, int j) { return (j - 1) * d + (i - 1); }; // 1-based (row, column)
    OrWitness w;
    w.alpha.resize(static_cast<std::size_t>(d * l));
    for (int j = 1; j <= l; ++j)
        for (int i = 1; i <= d; ++i)
            w.alpha[static_cast<std::size_t>(index(i, j))] = i;

    std::vector<std::pair<int, int>> entries; // (position, beta)
    switch (item) {
    case 1:
        if (l < 2 || q < d + 2)
            throw PreconditionError("item 1 needs l >= 2 and q >= d+2");
        for (int j = 1; j <= l; ++j)
            for (int i = 1; i <= d; ++i)
                entries.emplace_back(index(i, j), j == 1 ? d + 1 : d + 2);
        break;
    case 2:
        if (q < d + 1)
            throw PreconditionError("item 2 needs q >= d+1");
        for (int j = 1; j <= l; ++j)
            for (int i = 1; i <= d; ++i)
                if (i != 1 || j != 1)
                    entries.emplace_back(index(i, j), i == 1 ? d + 1 : 1);
        break;
    case 3:
        for (int j = 1; j <= l; ++j)
            for (int i = 2; i <= d; ++i)
                entries.emplace_back(index(i, j), 1);
        break;
    default:
        throw PreconditionError("witness item must be 1, 2, or 3");
    }
    std::sort(entries.begin(), entries.end());
    w.k = static_cast<int>(entries.size());
    for (auto [pos, b] : entries) {
        w.positions.push_back(pos);
        w.beta.push_back(b);
    }
    return w;
}

EtaCase eta_case(int d, int l, int q)
{
    check_shape(d, l, q);
    const bool full = l >= 2 && q >= d + 2;
    const bool extra = l >= 2 && q == d + 1 && !(d == 1 && l == 2);
    const bool tight = (l >= 2 && q == d && d >= 2) || (l == 1 && d >= 3);
    const bool quadratic = l == 1 && d <= 2 && q >= 3;
    const bool poly = (q == 2 && d * l <= 2) || q == 1;
    assert(int{full} + int{extra} + int{tight} + int{quadratic} + int{poly} == 1);
    if (full)
        return EtaCase::Full;
    if (extra)
        return EtaCase::OneExtraColor;
    if (tight)
        return EtaCase::Tight;
    if (quadratic)
        return EtaCase::Quadratic;
    if (poly)
        return EtaCase::Polynomial;
    throw Error("no exponent case applies to (" + std::to_string(d) + "," + std::to_string(l) + "," +
                std::to_string(q) + ")");
}

int eta(int d, int l, int q)
{
    switch (eta_case(d, l, q)) {
    case EtaCase::Full:
        return d * l;
    case EtaCase::OneExtraColor:
        return d * l - 1;
    case EtaCase::Tight:
        return (d - 1) * l;
    case EtaCase::Quadratic:
        return 2;
    case EtaCase::Polynomial:
        return 0;
    }
    return 0;
}

namespace {
void check_clique_params(int q, int t)
{
    if (q < 3 || t < 1 || t > q)
        throw PreconditionError("r(q,t) needs q >= 3 and 1 <= t <= q");
}
} // namespace

int r_clique(int q, int t)
{
    check_clique_params(q, t);
    int best = 0;
    for (int l = 1; l <= t; ++l)
        best = std::max(best, eta(q - l + 1, l, q));
    return best;
}

int r_clique_closed_form(int q, int t)
{
    check_clique_params(q, t);
    if (t == 1)
        return q - 1;
    if (t == 2 || (t == 3 && q == 3))
        return 2 * q - 3;
    if (t >= 3 && 2 * t < q + 1)
        return (q - t + 1) * t;
    return (q + 1) * (q + 1) / 4;
}

} // namespace ccker
