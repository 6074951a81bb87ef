#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "ccker/polykernel.hpp"
#include "ccker/random_instances.hpp"

using namespace ccker;

namespace {

/// Evaluates cp.poly on every C-colored matrix and compares with the definition.
bool captures_by_enumeration(const CapturePair& cp, int d, int l, int q)
{
    bool ok = true;
    brute::for_each_coloring(d * l, q, [&](const brute::Coloring& colors) {
        std::vector<PrimeField::Elem> point(static_cast<std::size_t>(cp.m * d * l));
        for (int c = 0; c < d * l; ++c)
            for (int i = 0; i < cp.m; ++i)
                point[c * cp.m + i] = cp.colors[colors[c] - 1][i];
        bool nonzero = cp.poly.evaluate(point) != 0;
        if (nonzero != brute::ur_matrix(colors, d, l))
            ok = false;
    });
    return ok;
}

bool has_full_product(const std::vector<std::vector<Vertex>>& f, int r)
{
    std::set<std::vector<Vertex>> set(f.begin(), f.end());
    for (const auto& a : f)
        for (const auto& b : f) {
            bool antipodal = true;
            for (int j = 0; j < r; ++j)
                antipodal = antipodal && a[j] != b[j];
            if (!antipodal)
                continue;
            bool full = true;
            for (int mask = 0; mask < (1 << r) && full; ++mask) {
                std::vector<Vertex> t(static_cast<std::size_t>(r));
                for (int j = 0; j < r; ++j)
                    t[j] = (mask >> j) & 1 ? b[j] : a[j];
                full = set.count(t) > 0;
            }
            if (full)
                return true;
        }
    return false;
}

} // namespace

TEST(Field, Arithmetic)
{
    PrimeField f = PrimeField::at_least(4);
    EXPECT_EQ(f.modulus(), 5u);
    EXPECT_EQ(PrimeField::at_least(3).modulus(), 3u);
    EXPECT_EQ(PrimeField::at_least(1).modulus(), 2u);
    EXPECT_EQ(f.from_int(-1), 4u);
    EXPECT_EQ(f.mul(3, 4), 2u);
    for (PrimeField::Elem a = 1; a < 5; ++a)
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_THROW(f.inv(0), PreconditionError);
    EXPECT_THROW(PrimeField(6), PreconditionError);
    EXPECT_TRUE(is_prime(13));
    EXPECT_FALSE(is_prime(1));
}

TEST(SparsePoly, ArithmeticAndEvaluation)
{
    PrimeField f(7);
    auto x = SparsePoly::variable(f, 2, 0);
    auto y = SparsePoly::variable(f, 2, 1);
    auto p = (x + y) * (x - y);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.terms().size(), 2u);
    std::vector<PrimeField::Elem> pt{3, 5};
    EXPECT_EQ(p.evaluate(pt), f.from_int(9 - 25));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(), -1);
    // Descending graded-lex order: x0^2 before x1^2.
    EXPECT_TRUE(grlex_greater(p.terms()[0].mono, p.terms()[1].mono));
    std::vector<int> swap{1, 0};
    EXPECT_EQ(p.rename(swap, 2), p.scaled(f.neg(1)));
}

TEST(SparsePoly, GrlexOrder)
{
    std::vector<Var> x0x0{0, 0};
    std::vector<Var> x0x1{0, 1};
    std::vector<Var> x1{1};
    EXPECT_TRUE(grlex_greater(Monomial::of(x0x0), Monomial::of(x0x1)));
    EXPECT_TRUE(grlex_greater(Monomial::of(x0x1), Monomial::of(x1)));
    EXPECT_FALSE(grlex_greater(Monomial::of(x1), Monomial::of(x1)));
}

TEST(Vandermonde, Examples)
{
    PrimeField f(3);
    auto set = vandermonde_set(2, 3, f);
    EXPECT_EQ(set, (std::vector<FieldVector>{{1, 0}, {1, 1}, {1, 2}}));
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            EXPECT_NE(f.sub(f.mul(set[i][0], set[j][1]), f.mul(set[i][1], set[j][0])), 0u);
    for (const auto& v : vandermonde_set(4, 5, PrimeField(5)))
        EXPECT_EQ(v[0], 1u);
    EXPECT_THROW(vandermonde_set(2, 4, f), PreconditionError);
}

TEST(DetPoly, Examples)
{
    PrimeField f(5);
    auto p = det_poly(2, 2, f);
    std::vector<PrimeField::Elem> pt{1, 2, 1, 4};
    EXPECT_EQ(p.evaluate(pt), f.from_int(4 - 2));
    EXPECT_EQ(det_poly(3, 3, f).degree(), 2);
    EXPECT_THROW(det_poly(2, 3, f), PreconditionError);
    auto c = vandermonde_set(3, 5, f);
    auto p3 = det_poly(3, 3, f);
    std::vector<PrimeField::Elem> eq;
    for (int col : {1, 3, 1})
        eq.insert(eq.end(), c[col].begin(), c[col].end());
    EXPECT_EQ(p3.evaluate(eq), 0u);
}

TEST(Capture, ItemSelectionAndDegrees)
{
    auto c223 = build_capture(2, 2, 3, PrimeField::at_least(3));
    EXPECT_EQ(c223.item, 3);
    EXPECT_LE(c223.poly.degree(), 3);
    auto c315 = build_capture(3, 1, 5, PrimeField::at_least(5));
    EXPECT_EQ(c315.item, 1);
    EXPECT_EQ(c315.poly.degree(), 2);
    auto c232 = build_capture(2, 3, 2, PrimeField::at_least(2));
    EXPECT_EQ(c232.item, 2);
    EXPECT_EQ(c232.poly.degree(), 3);
    EXPECT_THROW(build_capture(1, 3, 5, PrimeField::at_least(5)), PreconditionError);
    EXPECT_THROW(build_capture(2, 2, 3, PrimeField::at_least(3), 1), PreconditionError);
    EXPECT_TRUE(capture_items(1, 3, 5).empty());
}

TEST(Capture, CheckCapturesMatchesEnumeration)
{
    const std::vector<UrfcShape> shapes{{2, 1, 3}, {3, 1, 4}, {2, 2, 2}, {2, 2, 3}, {3, 2, 3},
                                        {2, 3, 3}, {1, 2, 2}, {2, 1, 2}, {1, 3, 2}};
    for (auto s : shapes)
        for (int item : capture_items(s.d, s.l, s.q)) {
            auto cp = build_capture(s.d, s.l, s.q, PrimeField::at_least(s.q), item);
            EXPECT_TRUE(check_captures(cp, s.d, s.l, s.q)) << s.d << s.l << s.q << " item " << item;
            EXPECT_TRUE(captures_by_enumeration(cp, s.d, s.l, s.q)) << s.d << s.l << s.q << " item " << item;
            EXPECT_LE(cp.poly.degree(), cp.degree_bound);
        }
}

TEST(Capture, SingleRowColorsCollapse)
{
    // With m = d = 1 every color vector is (1), so C has one element, not q.
    auto cp = build_capture(1, 1, 2, PrimeField::at_least(2), 1);
    EXPECT_EQ(cp.colors[0], cp.colors[1]);
    EXPECT_FALSE(check_captures(cp, 1, 1, 2));
}

TEST(Capture, CorruptedPairFails)
{
    auto cp = build_capture(2, 2, 3, PrimeField::at_least(3));
    for (std::size_t i = 0; i < cp.poly.terms().size(); i += 3) {
        CapturePair bad = cp;
        bad.poly = cp.poly.without_term(i);
        EXPECT_FALSE(check_captures(bad, 2, 2, 3));
        EXPECT_FALSE(captures_by_enumeration(bad, 2, 2, 3));
    }
}

TEST(KernelizePoly, EdgeCases)
{
    auto cp = build_capture(2, 2, 3, PrimeField::at_least(3));
    UrfcInstance empty{Graph(4), 3, {2, 2, {}}};
    EXPECT_TRUE(kernelize_poly(empty, cp).block.tuples.empty());

    UrfcInstance dup{Graph(4), 3, {2, 2, {{{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}}}};
    auto k = kernelize_poly(dup, cp);
    EXPECT_EQ(k.block.tuples.size(), 1u);

    UrfcInstance wrong{Graph(4), 3, {1, 2, {}}};
    EXPECT_THROW(kernelize_poly(wrong, cp), PreconditionError);
}

TEST(KernelizeUrfc, PreservesSolutionSetsAndRespectsBounds)
{
    struct Shape {
        int d, l, q;
    };
    Rng rng(31);
    for (Shape s : {Shape{2, 2, 3}, Shape{1, 2, 3}, Shape{3, 2, 3}, Shape{2, 3, 3}, Shape{2, 1, 3}, Shape{3, 1, 3},
                    Shape{1, 3, 4}}) {
        for (int trial = 0; trial < 12; ++trial) {
            int n = rng.uniform(std::max(s.d, 3), 6);
            double density = trial % 3 == 0 ? 1.0 : 0.3;
            auto inst = random_urfc(n, s.d, s.l, s.q, density, 0.2, rng);
            auto k = kernelize_urfc(inst);
            ASSERT_EQ(brute::urfc(k.instance), brute::urfc(inst)) << s.d << s.l << s.q;
            EXPECT_EQ(k.instance.graph, inst.graph);
            EXPECT_LE(k.instance.block.tuples.size(), inst.block.tuples.size());
            EXPECT_LE(k.instance.block.tuples.size(), k.meta.bound);
            for (const auto& t : k.instance.block.tuples)
                EXPECT_TRUE(std::binary_search(inst.block.tuples.begin(), inst.block.tuples.end(), t));
            if (k.meta.method == "poly") {
                int m = k.meta.capture_item == 1 ? s.d : s.q;
                int r = k.meta.capture_item == 1 ? s.d - 1 : k.meta.capture_item == 2 ? (s.d - 1) * s.l : s.d * s.l - 1;
                EXPECT_EQ(k.meta.bound, binomial(static_cast<std::uint64_t>(m * n + r), static_cast<std::uint64_t>(r)));
            }
            // Idempotence and determinism.
            auto again = kernelize_urfc(k.instance);
            EXPECT_EQ(again.instance, k.instance);
            EXPECT_EQ(kernelize_urfc(inst).instance, k.instance);
        }
    }
}

TEST(KernelizeUrfc, DispatchByExponent)
{
    Rng rng(2);
    EXPECT_EQ(kernelize_urfc(random_urfc(4, 1, 2, 3, 0.5, 0.2, rng)).meta.method, "dedup");
    EXPECT_EQ(kernelize_urfc(random_urfc(4, 2, 2, 3, 0.5, 0.2, rng)).meta.method, "poly");
    EXPECT_EQ(kernelize_urfc(random_urfc(4, 2, 1, 2, 0.5, 0.2, rng)).meta.method, "decided");
}

TEST(KernelizeUrfc, PolynomialCasesDecideCorrectly)
{
    struct Shape {
        int d, l, q;
    };
    Rng rng(41);
    for (Shape s : {Shape{2, 1, 2}, Shape{1, 2, 2}, Shape{1, 1, 2}, Shape{1, 1, 1}, Shape{1, 3, 1}}) {
        for (int trial = 0; trial < 40; ++trial) {
            int n = rng.uniform(std::max(s.d, 2), 6);
            auto inst = random_urfc(n, s.d, s.l, s.q, trial % 2 ? 0.1 : 0.4, trial % 4 == 0 ? 0.0 : 0.25, rng);
            auto k = kernelize_urfc(inst);
            ASSERT_EQ(k.meta.method, "decided");
            bool yes = !brute::urfc(inst).empty();
            ASSERT_TRUE(k.meta.decided.has_value());
            EXPECT_EQ(*k.meta.decided, yes) << s.d << s.l << s.q << " trial " << trial;
            EXPECT_EQ(!brute::urfc(k.instance).empty(), yes);
            EXPECT_LE(k.instance.graph.num_vertices(), s.q + 1);
        }
    }
}

TEST(KernelizeUrfc, DenseInstancesShrink)
{
    Rng rng(5);
    auto inst = random_urfc(5, 2, 2, 3, 1.0, 0.0, rng);
    auto k = kernelize_urfc(inst);
    // C(10,2)+10 = 55 tuples, bound C(18,3) = 816 is larger, so only the bound applies.
    EXPECT_EQ(inst.block.tuples.size(), 55u);
    EXPECT_EQ(k.meta.bound, 816u);
    EXPECT_LE(k.instance.block.tuples.size(), 55u);
}

TEST(KernelizeGurfc, UnionOfBlocks)
{
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        auto inst = random_gurfc(5, 3, {{2, 2}, {1, 2}}, 0.3, 0.2, rng);
        auto k = kernelize_gurfc(inst);
        ASSERT_EQ(brute::urfc(k.instance), brute::urfc(inst));
        EXPECT_LE(k.instance.num_tuples() + k.instance.graph.num_edges(), k.bound);
    }
    auto single = random_urfc(5, 2, 2, 3, 0.3, 0.2, rng);
    GurfcInstance as_g{single.graph, single.q, {single.block}};
    EXPECT_EQ(kernelize_gurfc(as_g).instance.blocks.at(0), kernelize_urfc(single).instance.block);

    GurfcInstance bad{Graph(3), 2, {{1, 1, {}}}};
    EXPECT_THROW(kernelize_gurfc(bad), PreconditionError);
}

TEST(Carbonnel, FullProductLosesOneTuple)
{
    auto rel = std::make_shared<const Relation>(make_nur(1, 3, 2));
    RccInstance inst{Graph(6), rel, {}};
    for (int mask = 0; mask < 8; ++mask)
        inst.constraints.push_back({(mask & 4) ? 2 : 1, (mask & 2) ? 4 : 3, (mask & 1) ? 6 : 5});
    auto out = kernelize_carbonnel(inst);
    EXPECT_EQ(out.constraints.size(), 7u);
    EXPECT_FALSE(has_full_product(out.constraints, 3));
    EXPECT_EQ(std::count(out.constraints.begin(), out.constraints.end(), std::vector<Vertex>{2, 4, 6}), 0);

    RccInstance none{Graph(4), rel, {{1, 2, 3}, {2, 3, 4}}};
    EXPECT_EQ(kernelize_carbonnel(none).constraints, none.constraints);

    RccInstance binary{Graph(2), std::make_shared<const Relation>(make_nur(1, 2, 2)), {}};
    EXPECT_THROW(kernelize_carbonnel(binary), PreconditionError);
}

TEST(Carbonnel, SafeWithoutFullArityOr)
{
    auto rel = std::make_shared<const Relation>(make_nur(1, 3, 2));
    ASSERT_LT(max_or_arity(*rel), 3);
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_rcc(rng.uniform(3, 6), rel, rng.uniform(5, 40), 0.15, rng);
        auto out = kernelize_carbonnel(inst);
        EXPECT_FALSE(has_full_product(out.constraints, 3));
        ASSERT_EQ(brute::rcc(out), brute::rcc(inst));
    }
}
