#include "ccker/polykernel.hpp"

#include <algorithm>
#include <string>

#include "ccker/relation.hpp"

namespace ccker {

std::vector<FieldVector> vandermonde_set(int m, int q, const PrimeField& field)
{
    if (m < 1 || q < 1)
        throw PreconditionError("vandermonde_set needs m >= 1 and q >= 1");
    if (field.modulus() < static_cast<std::uint32_t>(q))
        throw PreconditionError("GF(" + std::to_string(field.modulus()) + ") has fewer than q=" + std::to_string(q) +
                                " elements");
    std::vector<FieldVector> out;
    for (int i = 0; i < q; ++i) {
        FieldVector v(static_cast<std::size_t>(m));
        PrimeField::Elem power = 1;
        for (auto& x : v) {
            x = power;
            power = field.mul(power, static_cast<PrimeField::Elem>(i));
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

int var_index(int m, int column, int row)
{
    return column * m + row;
}

/// p_{m,t} on the given columns of an m-row variable matrix, with an optional
/// extra last column given as polynomials.
SparsePoly ones_row_det(const PrimeField& f, int num_vars, int m, const std::vector<int>& columns,
                        const std::vector<SparsePoly>* extra)
{
    const std::size_t t = columns.size() + (extra ? 1 : 0);
    std::vector<std::vector<SparsePoly>> mat(t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            if (i == 0)
                mat[i].push_back(SparsePoly::constant(f, num_vars, 1));
            else if (j < columns.size())
                mat[i].push_back(SparsePoly::variable(f, num_vars, var_index(m, columns[j], static_cast<int>(i))));
            else
                mat[i].push_back((*extra)[i]);
        }
    return determinant(mat);
}

std::vector<int> column_range(int first, int count)
{
    std::vector<int> cols(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        cols[static_cast<std::size_t>(j)] = first + j;
    return cols;
}

} // namespace

SparsePoly det_poly(int m, int t, const PrimeField& field)
{
    if (t < 1 || t > m)
        throw PreconditionError("det_poly needs 1 <= t <= m");
    return ones_row_det(field, m * t, m, column_range(0, t), nullptr);
}

std::vector<int> capture_items(int d, int l, int q)
{
    check_shape(d, l, q);
    std::vector<int> items;
    if (l == 1)
        items.push_back(1);
    if (q == d)
        items.push_back(2);
    if (q == d + 1)
        items.push_back(3);
    return items;
}

CapturePair build_capture(int d, int l, int q, const PrimeField& field, int item)
{
    auto items = capture_items(d, l, q);
    if (items.empty())
        throw PreconditionError("no capture construction applies to (d,l,q)=(" + std::to_string(d) + "," +
                                std::to_string(l) + "," + std::to_string(q) + ")");
    if (item == 0)
        item = items.front();
    if (std::find(items.begin(), items.end(), item) == items.end())
        throw PreconditionError("capture item " + std::to_string(item) + " does not apply to (d,l,q)=(" +
                                std::to_string(d) + "," + std::to_string(l) + "," + std::to_string(q) + ")");
    const int m = item == 3 ? q : d;
    const int nv = m * d * l;
    CapturePair cp{field, d, l, q, m, item, 0, vandermonde_set(m, q, field), SparsePoly(field, nv)};
    switch (item) {
    case 1:
        cp.degree_bound = d - 1;
        cp.poly = ones_row_det(field, nv, m, column_range(0, d), nullptr);
        break;
    case 2: {
        cp.degree_bound = (d - 1) * l;
        SparsePoly p = SparsePoly::constant(field, nv, 1);
        for (int b = 0; b < l; ++b)
            p = p * ones_row_det(field, nv, m, column_range(b * d, d), nullptr);
        cp.poly = p;
        break;
    }
    default: {
        cp.degree_bound = d * l - 1;
        // Last column a - y: a is the sum of C, y the sum of the first block's columns.
        std::vector<SparsePoly> extra;
        for (int row = 0; row < m; ++row) {
            PrimeField::Elem a = 0;
            for (const auto& v : cp.colors)
                a = field.add(a, v[static_cast<std::size_t>(row)]);
            SparsePoly e = SparsePoly::constant(field, nv, a);
            for (int j = 0; j < d; ++j)
                e = e - SparsePoly::variable(field, nv, var_index(m, j, row));
            extra.push_back(std::move(e));
        }
        SparsePoly p = ones_row_det(field, nv, m, column_range(0, d), nullptr);
        for (int b = 1; b < l; ++b)
            p = p * ones_row_det(field, nv, m, column_range(b * d, d), &extra);
        cp.poly = p;
        break;
    }
    }
    return cp;
}

bool check_captures(const CapturePair& cp, int d, int l, int q, const Limits& limits)
{
    check_shape(d, l, q);
    const int width = d * l;
    if (saturating_pow(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(width)) > limits.relation_tuples)
        throw BudgetExceeded("q^(dl) colored matrices exceed the enumeration budget");
    if (cp.colors.size() != static_cast<std::size_t>(q) || cp.poly.num_vars() != cp.m * width)
        return false;
    for (std::size_t i = 0; i < cp.colors.size(); ++i) {
        if (cp.colors[i].size() != static_cast<std::size_t>(cp.m))
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (cp.colors[i] == cp.colors[j])
                return false;
    }
    std::vector<int> colors(static_cast<std::size_t>(width), 1);
    std::vector<PrimeField::Elem> point(static_cast<std::size_t>(cp.m * width));
    while (true) {
        for (int c = 0; c < width; ++c)
            for (int i = 0; i < cp.m; ++i)
                point[static_cast<std::size_t>(var_index(cp.m, c, i))] =
                    cp.colors[static_cast<std::size_t>(colors[static_cast<std::size_t>(c)] - 1)][static_cast<std::size_t>(i)];
        if ((cp.poly.evaluate(point) != 0) != is_uniformly_rainbow_matrix(colors, d, l))
            return false;
        int pos = width - 1;
        while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == q)
            colors[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0)
            break;
        ++colors[static_cast<std::size_t>(pos)];
    }
    return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) / i stays an integer: it is binom(n-k+i, i).
        result = result * (n - k + i) / i;
        if (result > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace ccker
