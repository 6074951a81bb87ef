#include <gtest/gtest.h>

#include <sstream>

#include "ccker/io.hpp"
#include "ccker/random_instances.hpp"

using namespace ccker;

namespace {

template <class Parse>
auto parse_text(const std::string& text, Parse parse)
{
    std::istringstream in(text);
    return parse(in);
}

} // namespace

TEST(Graph, BasicOperations)
{
    Graph g(3);
    EXPECT_TRUE(g.add_edge(1, 2));
    EXPECT_FALSE(g.add_edge(2, 1));
    EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
    EXPECT_THROW(g.add_edge(1, 4), PreconditionError);
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(1, 3));
    EXPECT_EQ(g.add_vertices(2), 4);
    EXPECT_EQ(g.num_vertices(), 5);
    g.add_edge(4, 5);
    std::vector<Vertex> sub{2, 4, 5};
    Graph h = g.induced(sub);
    EXPECT_EQ(h.num_vertices(), 3);
    EXPECT_EQ(h.edges(), (std::vector<std::pair<Vertex, Vertex>>{{2, 3}}));
    EXPECT_EQ(complete_graph(4).num_edges(), 6u);
}

TEST(Canonicalize, Examples)
{
    EXPECT_EQ(canonicalize_urfc_tuple({{3, 1}, {2, 4}}, 2), (SetTuple{{1, 3}, {2, 4}}));
    EXPECT_EQ(canonicalize_urfc_tuple({{2, 4}, {1, 3}}, 2), (SetTuple{{1, 3}, {2, 4}}));
    EXPECT_EQ(canonicalize_urfc_tuple({{1, 3}, {1, 3}}, 2), (SetTuple{{1, 3}, {1, 3}}));
    EXPECT_THROW(canonicalize_urfc_tuple({{1, 1}}, 2), PreconditionError);
    EXPECT_THROW(canonicalize_urfc_tuple({{1, 2, 3}}, 2), PreconditionError);
}

TEST(CliqueKv, ValidateExamples)
{
    Graph tri = complete_graph(3);
    auto parts = validate_clique_kv(tri, {});
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].size(), 3u);

    Graph path(3);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    EXPECT_THROW(validate_clique_kv(path, {}), NotACliqueError);
    std::vector<Vertex> middle{2};
    auto two = validate_clique_kv(path, middle);
    EXPECT_EQ(two, (std::vector<std::vector<Vertex>>{{1}, {3}}));
    EXPECT_THROW(validate_clique_kv(tri, {}, 2), PreconditionError);
}

TEST(CliqueKv, MakeRecordsPartition)
{
    Graph g(5);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    auto inst = CliqueKvInstance::make(g, {1});
    EXPECT_EQ(inst.k(), 1);
    EXPECT_EQ(inst.cliques, (std::vector<std::vector<Vertex>>{{2}, {3, 4, 5}}));
    EXPECT_EQ(inst.max_clique_size(), 3u);
    EXPECT_TRUE(inst.in_modulator(1));
    EXPECT_FALSE(inst.in_modulator(2));
}

TEST(Dimacs, ParsesExample)
{
    auto f = parse_text("p cnf 3 1\n1 -2 3 0\n", parse_dimacs);
    EXPECT_EQ(f.num_vars, 3);
    ASSERT_EQ(f.clauses.size(), 1u);
    EXPECT_EQ(f.clauses[0], (std::vector<int>{1, -2, 3}));
    EXPECT_THROW(parse_text("p cnf 2 1\n1 1 0\n", parse_dimacs), ParseError);
    EXPECT_THROW(parse_text("p cnf 2 1\n1 3 0\n", parse_dimacs), ParseError);
}

TEST(Io, GraphErrorsArePositioned)
{
    try {
        parse_text("graph n=3 m=2\ne 1 2\ne 2 1\n", parse_graph);
        FAIL() << "duplicate edge accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_text("graph n=3 m=1\ne 1 1\n", parse_graph), ParseError);
    EXPECT_THROW(parse_text("graph n=3 m=1\ne 1 4\n", parse_graph), ParseError);
    EXPECT_THROW(parse_text("graph n=3 m=2\ne 1 2\n", parse_graph), ParseError);
    EXPECT_THROW(parse_text("grph n=3 m=0\n", parse_graph), ParseError);
}

TEST(Io, UrfcRepeatedVertexInSetIsRejected)
{
    EXPECT_THROW(parse_text("urfc q=3\ngraph n=3 m=0\nblock d=2 l=1 count=1\n1 1\n", parse_urfc), ParseError);
    EXPECT_THROW(parse_text("urfc q=3\ngraph n=3 m=0\nblock d=2 l=1 count=1\n1 2 3\n", parse_urfc), ParseError);
}

TEST(Io, RelationFormats)
{
    auto rel = parse_text("relation q=2 r=2\n1 1\n2 2\n", [](std::istream& in) { return parse_relation(in); });
    EXPECT_EQ(rel, make_nur(2, 1, 2));
    auto nur = parse_text("nur d=1 l=3 q=4\n", [](std::istream& in) { return parse_relation(in); });
    EXPECT_EQ(nur, make_nur(1, 3, 4));
    EXPECT_EQ(parse_text(serialize_relation(rel), [](std::istream& in) { return parse_relation(in); }), rel);
    EXPECT_THROW(parse_text("relation q=2 r=2\n1 1\n1 1\n", [](std::istream& in) { return parse_relation(in); }),
                 ParseError);
    EXPECT_THROW(parse_text("relation q=2 r=2\n1 3\n", [](std::istream& in) { return parse_relation(in); }),
                 ParseError);
}

TEST(Io, SniffAndMetadata)
{
    std::string header = metadata_header({{"field", "3"}, {"bound", "10"}});
    EXPECT_EQ(header, "# field=3\n# bound=10\n");
    std::istringstream in(header + "\nurfc q=3\n");
    EXPECT_EQ(sniff_kind(in), "urfc");
}

TEST(Io, RandomRoundTrips)
{
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng.uniform(0, 8), 0.3, rng);
        std::string s = serialize_graph(g);
        EXPECT_EQ(parse_text(s, parse_graph), g);
        EXPECT_EQ(serialize_graph(parse_text(s, parse_graph)), s);

        auto u = random_urfc(rng.uniform(2, 6), 2, 2, 3, 0.1, 0.3, rng);
        s = serialize_urfc(u);
        EXPECT_EQ(parse_text(s, parse_urfc), u);
        EXPECT_EQ(serialize_urfc(parse_text(s, parse_urfc)), s);

        auto gu = random_gurfc(5, 3, {{2, 2}, {1, 2}, {3, 1}}, 0.05, 0.2, rng);
        s = serialize_gurfc(gu);
        EXPECT_EQ(parse_text(s, parse_gurfc), gu);

        auto h = random_hypergraph(6, 3, 5, rng);
        s = serialize_hypergraph(h);
        EXPECT_EQ(parse_text(s, parse_hypergraph), h);

        auto f = random_cnf(5, 3, 6, rng);
        s = serialize_dimacs(f);
        EXPECT_EQ(parse_text(s, parse_dimacs), f);

        auto kv = random_cliquekv(4, 3, 3, 0.4, 0.4, rng);
        s = serialize_cliquekv(kv);
        EXPECT_EQ(parse_text(s, parse_cliquekv), kv);
        EXPECT_EQ(serialize_cliquekv(parse_text(s, parse_cliquekv)), s);

        auto rel = std::make_shared<const Relation>(make_nur(1, 2, 3));
        auto rc = random_rclc(5, rel, 4, 0.3, 0.7, rng);
        s = serialize_rclc(rc);
        auto back = parse_text(s, [](std::istream& in) { return parse_rclc(in); });
        EXPECT_EQ(back.graph, rc.graph);
        EXPECT_EQ(back.lists, rc.lists);
        EXPECT_EQ(*back.relation, *rc.relation);
        EXPECT_EQ(back.constraints, rc.constraints);
        EXPECT_EQ(serialize_rclc(back), s);

        std::string spec_text = serialize_rcc(random_rcc(4, rel, 3, 0.3, rng), "nur d=1 l=2 q=3");
        std::string spec;
        auto rcc = parse_text(spec_text, [&](std::istream& in) { return parse_rcc(in, {}, {}, &spec); });
        EXPECT_EQ(spec, "nur d=1 l=2 q=3");
        EXPECT_EQ(*rcc.relation, *rel);
        EXPECT_EQ(serialize_rcc(rcc, spec), spec_text);
    }
}

TEST(Generators, SeededDeterminism)
{
    Rng a(7);
    Rng b(7);
    EXPECT_EQ(serialize_urfc(random_urfc(6, 2, 2, 3, 0.1, 0.3, a)), serialize_urfc(random_urfc(6, 2, 2, 3, 0.1, 0.3, b)));
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        int x = c.uniform(3, 9);
        ASSERT_GE(x, 3);
        ASSERT_LE(x, 9);
    }
}

TEST(Generators, AllUrfcTuplesAreCanonicalAndDistinct)
{
    auto tuples = all_urfc_tuples(4, 2, 2);
    // 6 pairs, multisets of size 2: C(7,2) = 21.
    EXPECT_EQ(tuples.size(), 21u);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        EXPECT_EQ(canonicalize_urfc_tuple(tuples[i], 2), tuples[i]);
        if (i > 0) {
            EXPECT_LT(tuples[i - 1], tuples[i]);
        }
    }
}

TEST(Cnf, WidthValidation)
{
    CnfFormula f{3, {{1, -2, 3}, {1, 2}}};
    EXPECT_NO_THROW(f.validate());
    EXPECT_THROW(f.validate_width(3), PreconditionError);
    CnfFormula bad{3, {{1, -1, 2}}};
    EXPECT_THROW(bad.validate(), PreconditionError);
}
