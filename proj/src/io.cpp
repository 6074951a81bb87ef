#include "ccker/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace ccker {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in, bool dimacs = false) : in_(in), dimacs_(dimacs) {}

    /// Next non-blank, non-comment line split on whitespace.
    bool next(std::vector<std::string>& tokens)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            std::istringstream ss(raw);
            tokens.clear();
            for (std::string tok; ss >> tok;)
                tokens.push_back(tok);
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            if (dimacs_ && tokens.front() == "c")
                continue;
            return true;
        }
        return false;
    }

    std::vector<std::string> expect(const std::string& what)
    {
        std::vector<std::string> tokens;
        if (!next(tokens))
            fail("unexpected end of input, expected " + what);
        return tokens;
    }

    void expect_end()
    {
        std::vector<std::string> tokens;
        if (next(tokens))
            fail("unexpected trailing line starting with '" + tokens.front() + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    int to_int(const std::string& tok) const
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("expected an integer, got '" + tok + "'");
        return value;
    }

    int key_value(const std::vector<std::string>& tokens, std::size_t index, const std::string& key) const
    {
        if (index >= tokens.size())
            fail("missing '" + key + "=' field");
        const auto& tok = tokens[index];
        if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=')
            fail("expected '" + key + "=<int>', got '" + tok + "'");
        return to_int(tok.substr(key.size() + 1));
    }

    void expect_keyword(const std::vector<std::string>& tokens, const std::string& keyword, std::size_t count) const
    {
        if (tokens.front() != keyword)
            fail("expected '" + keyword + "', got '" + tokens.front() + "'");
        if (tokens.size() != count)
            fail("'" + keyword + "' line has " + std::to_string(tokens.size()) + " fields, expected " +
                 std::to_string(count));
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    bool dimacs_;
    std::size_t line_ = 0;
};

int nonnegative(const LineReader& r, int value, const std::string& what)
{
    if (value < 0)
        r.fail(what + " must be nonnegative");
    return value;
}

std::vector<Tuple> read_tuples(LineReader& r, int q, int arity, std::optional<int> count)
{
    std::vector<Tuple> tuples;
    std::set<Tuple> seen;
    std::vector<std::string> tokens;
    while (!count || static_cast<int>(tuples.size()) < *count) {
        if (!r.next(tokens)) {
            if (count)
                r.fail("expected " + std::to_string(*count) + " relation tuples, found " + std::to_string(tuples.size()));
            break;
        }
        if (tokens.size() != static_cast<std::size_t>(arity))
            r.fail("relation tuple has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(arity));
        Tuple t;
        for (const auto& tok : tokens) {
            int x = r.to_int(tok);
            if (x < 1 || x > q)
                r.fail("relation entry " + std::to_string(x) + " outside 1.." + std::to_string(q));
            t.push_back(x);
        }
        if (!seen.insert(t).second)
            r.fail("duplicate relation tuple");
        tuples.push_back(std::move(t));
    }
    return tuples;
}

/// `tokens` starts at the relation keyword ("relation", "nur", "file").
Relation relation_from_spec(LineReader& r, const std::vector<std::string>& tokens, bool counted,
                            const std::filesystem::path& base_dir, const Limits& limits)
{
    try {
        if (tokens.front() == "nur") {
            r.expect_keyword(tokens, "nur", 4);
            int d = r.key_value(tokens, 1, "d");
            int l = r.key_value(tokens, 2, "l");
            int q = r.key_value(tokens, 3, "q");
            return make_nur(d, l, q, limits);
        }
        if (tokens.front() == "relation") {
            r.expect_keyword(tokens, "relation", counted ? 4 : 3);
            int q = r.key_value(tokens, 1, "q");
            int arity = r.key_value(tokens, 2, "r");
            if (q < 1 || arity < 1)
                r.fail("relation needs q >= 1 and r >= 1");
            std::optional<int> count;
            if (counted)
                count = nonnegative(r, r.key_value(tokens, 3, "count"), "count");
            return Relation(q, arity, read_tuples(r, q, arity, count), limits);
        }
        if (tokens.front() == "file") {
            r.expect_keyword(tokens, "file", 2);
            std::filesystem::path p = tokens[1];
            if (p.is_relative())
                p = base_dir / p;
            std::ifstream f(p);
            if (!f)
                r.fail("cannot open relation file " + p.string());
            return parse_relation(f, limits);
        }
    } catch (const PreconditionError& e) {
        r.fail(e.what());
    }
    r.fail("unknown relation spec '" + tokens.front() + "'");
}

Graph read_graph_block(LineReader& r)
{
    auto header = r.expect("'graph n=<n> m=<m>'");
    r.expect_keyword(header, "graph", 3);
    int n = nonnegative(r, r.key_value(header, 1, "n"), "n");
    int m = nonnegative(r, r.key_value(header, 2, "m"), "m");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        auto tokens = r.expect("edge line 'e u v'");
        r.expect_keyword(tokens, "e", 3);
        int u = r.to_int(tokens[1]);
        int v = r.to_int(tokens[2]);
        if (!g.contains(u) || !g.contains(v))
            r.fail("edge endpoint outside 1.." + std::to_string(n));
        if (u == v)
            r.fail("loop at vertex " + std::to_string(u));
        if (!g.add_edge(u, v))
            r.fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return g;
}

void write_graph_block(std::ostream& out, const Graph& g)
{
    out << "graph n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

UrfcBlock read_block(LineReader& r, const std::vector<std::string>& header, const Graph& g)
{
    r.expect_keyword(header, "block", 4);
    UrfcBlock block;
    block.d = r.key_value(header, 1, "d");
    block.l = r.key_value(header, 2, "l");
    int count = nonnegative(r, r.key_value(header, 3, "count"), "count");
    if (block.d < 1 || block.l < 1)
        r.fail("block needs d >= 1 and l >= 1");
    const auto width = static_cast<std::size_t>(block.d * block.l);
    for (int i = 0; i < count; ++i) {
        auto tokens = r.expect("a tuple line");
        if (tokens.size() != width)
            r.fail("tuple line has " + std::to_string(tokens.size()) + " ids, expected d*l=" + std::to_string(width));
        SetTuple tuple(static_cast<std::size_t>(block.l));
        for (std::size_t k = 0; k < width; ++k) {
            int v = r.to_int(tokens[k]);
            if (!g.contains(v))
                r.fail("tuple vertex " + std::to_string(v) + " out of range");
            tuple[k / static_cast<std::size_t>(block.d)].push_back(v);
        }
        try {
            block.tuples.push_back(canonicalize_urfc_tuple(std::move(tuple), block.d));
        } catch (const PreconditionError& e) {
            r.fail(e.what());
        }
    }
    block.canonicalize();
    return block;
}

void write_block(std::ostream& out, const UrfcBlock& b)
{
    out << "block d=" << b.d << " l=" << b.l << " count=" << b.tuples.size() << '\n';
    for (const auto& t : b.tuples) {
        bool first = true;
        for (const auto& s : t)
            for (Vertex v : s) {
                out << (first ? "" : " ") << v;
                first = false;
            }
        out << '\n';
    }
}

int read_q_header(LineReader& r, const std::string& kind)
{
    auto header = r.expect("'" + kind + " q=<q>'");
    r.expect_keyword(header, kind, 2);
    int q = r.key_value(header, 1, "q");
    if (q < 1)
        r.fail("q must be positive");
    return q;
}

std::vector<std::vector<Vertex>> read_constraints(LineReader& r, const std::vector<std::string>& header, const Graph& g,
                                                  int arity)
{
    r.expect_keyword(header, "constraints", 2);
    int count = nonnegative(r, r.key_value(header, 1, "count"), "count");
    std::vector<std::vector<Vertex>> out;
    for (int i = 0; i < count; ++i) {
        auto tokens = r.expect("a constraint line");
        if (tokens.size() != static_cast<std::size_t>(arity))
            r.fail("constraint has " + std::to_string(tokens.size()) + " ids, relation arity is " + std::to_string(arity));
        std::vector<Vertex> c;
        for (const auto& tok : tokens) {
            int v = r.to_int(tok);
            if (!g.contains(v))
                r.fail("constraint vertex " + std::to_string(v) + " out of range");
            c.push_back(v);
        }
        out.push_back(std::move(c));
    }
    return out;
}

void write_constraints(std::ostream& out, const std::vector<std::vector<Vertex>>& constraints)
{
    out << "constraints count=" << constraints.size() << '\n';
    for (const auto& c : constraints) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? " " : "") << c[i];
        out << '\n';
    }
}

std::string join_from(const std::vector<std::string>& tokens, std::size_t start)
{
    std::string s;
    for (std::size_t i = start; i < tokens.size(); ++i)
        s += (i > start ? " " : "") + tokens[i];
    return s;
}

void write_rel(std::ostream& out, const Relation& rel, const std::string& rel_spec)
{
    if (!rel_spec.empty()) {
        out << "rel " << rel_spec << '\n';
        return;
    }
    out << "rel relation q=" << rel.q() << " r=" << rel.r() << " count=" << rel.size() << '\n';
    for (const auto& t : rel.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out << (i ? " " : "") << t[i];
        out << '\n';
    }
}

std::shared_ptr<const Relation> read_rel(LineReader& r, const std::filesystem::path& base_dir, const Limits& limits,
                                         std::string* rel_spec)
{
    auto tokens = r.expect("'rel <spec>'");
    if (tokens.front() != "rel" || tokens.size() < 2)
        r.fail("expected 'rel <spec>'");
    if (rel_spec)
        *rel_spec = tokens[1] == "relation" ? std::string{} : join_from(tokens, 1);
    std::vector<std::string> spec(tokens.begin() + 1, tokens.end());
    return std::make_shared<const Relation>(relation_from_spec(r, spec, true, base_dir, limits));
}

} // namespace

Relation parse_relation(std::istream& in, const Limits& limits)
{
    LineReader r(in);
    auto tokens = r.expect("'relation q=<q> r=<r>' or 'nur d=<d> l=<l> q=<q>'");
    if (tokens.front() != "relation" && tokens.front() != "nur")
        r.fail("expected 'relation' or 'nur', got '" + tokens.front() + "'");
    Relation rel = relation_from_spec(r, tokens, false, {}, limits);
    r.expect_end();
    return rel;
}

std::string serialize_relation(const Relation& rel)
{
    std::ostringstream out;
    out << "relation q=" << rel.q() << " r=" << rel.r() << '\n';
    for (const auto& t : rel.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out << (i ? " " : "") << t[i];
        out << '\n';
    }
    return out.str();
}

Graph parse_graph(std::istream& in)
{
    LineReader r(in);
    Graph g = read_graph_block(r);
    r.expect_end();
    return g;
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    write_graph_block(out, g);
    return out.str();
}

Hypergraph parse_hypergraph(std::istream& in)
{
    LineReader r(in);
    auto header = r.expect("'hgraph n=<n> m=<m>'");
    r.expect_keyword(header, "hgraph", 3);
    Hypergraph h;
    h.n = nonnegative(r, r.key_value(header, 1, "n"), "n");
    int m = nonnegative(r, r.key_value(header, 2, "m"), "m");
    for (int i = 0; i < m; ++i) {
        auto tokens = r.expect("hyperedge line 'he s v1 ... vs'");
        if (tokens.front() != "he" || tokens.size() < 2)
            r.fail("expected 'he s v1 ... vs'");
        int s = r.to_int(tokens[1]);
        if (s < 1 || tokens.size() != static_cast<std::size_t>(s) + 2)
            r.fail("hyperedge size field does not match its vertex list");
        std::vector<Vertex> e;
        for (std::size_t k = 2; k < tokens.size(); ++k)
            e.push_back(r.to_int(tokens[k]));
        try {
            if (!h.add_edge(std::move(e)))
                r.fail("duplicate hyperedge");
        } catch (const PreconditionError& err) {
            r.fail(err.what());
        }
    }
    r.expect_end();
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h)
{
    std::ostringstream out;
    out << "hgraph n=" << h.n << " m=" << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        out << "he " << e.size();
        for (Vertex v : e)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

UrfcInstance parse_urfc(std::istream& in)
{
    LineReader r(in);
    UrfcInstance inst;
    inst.q = read_q_header(r, "urfc");
    inst.graph = read_graph_block(r);
    auto header = r.expect("'block d=<d> l=<l> count=<c>'");
    inst.block = read_block(r, header, inst.graph);
    if (inst.q < inst.block.d)
        r.fail("q=" + std::to_string(inst.q) + " is smaller than d=" + std::to_string(inst.block.d));
    r.expect_end();
    return inst;
}

std::string serialize_urfc(const UrfcInstance& inst)
{
    std::ostringstream out;
    out << "urfc q=" << inst.q << '\n';
    write_graph_block(out, inst.graph);
    write_block(out, inst.block);
    return out.str();
}

GurfcInstance parse_gurfc(std::istream& in)
{
    LineReader r(in);
    GurfcInstance inst;
    inst.q = read_q_header(r, "gurfc");
    inst.graph = read_graph_block(r);
    std::vector<std::string> tokens;
    while (r.next(tokens)) {
        inst.blocks.push_back(read_block(r, tokens, inst.graph));
        if (inst.q < inst.blocks.back().d)
            r.fail("q=" + std::to_string(inst.q) + " is smaller than d=" + std::to_string(inst.blocks.back().d));
    }
    inst.canonicalize();
    return inst;
}

std::string serialize_gurfc(const GurfcInstance& inst)
{
    std::ostringstream out;
    out << "gurfc q=" << inst.q << '\n';
    write_graph_block(out, inst.graph);
    for (const auto& b : inst.blocks)
        write_block(out, b);
    return out.str();
}

RccInstance parse_rcc(std::istream& in, const std::filesystem::path& base_dir, const Limits& limits,
                      std::string* rel_spec)
{
    LineReader r(in);
    auto header = r.expect("'rcc'");
    r.expect_keyword(header, "rcc", 1);
    RccInstance inst;
    inst.graph = read_graph_block(r);
    inst.relation = read_rel(r, base_dir, limits, rel_spec);
    inst.constraints = read_constraints(r, r.expect("'constraints count=<c>'"), inst.graph, inst.relation->r());
    r.expect_end();
    return inst;
}

std::string serialize_rcc(const RccInstance& inst, const std::string& rel_spec)
{
    std::ostringstream out;
    out << "rcc\n";
    write_graph_block(out, inst.graph);
    write_rel(out, *inst.relation, rel_spec);
    write_constraints(out, inst.constraints);
    return out.str();
}

RclcInstance parse_rclc(std::istream& in, const std::filesystem::path& base_dir, const Limits& limits,
                        std::string* rel_spec)
{
    LineReader r(in);
    auto header = r.expect("'rclc'");
    r.expect_keyword(header, "rclc", 1);
    RclcInstance inst;
    inst.graph = read_graph_block(r);
    inst.relation = read_rel(r, base_dir, limits, rel_spec);
    const int n = inst.graph.num_vertices();
    const int q = inst.relation->q();
    inst.lists = ListAssignment(q, n);
    for (int v = 1; v <= n; ++v) {
        auto tokens = r.expect("'list " + std::to_string(v) + ": ...'");
        if (tokens.size() < 2 || tokens[0] != "list" || tokens[1] != std::to_string(v) + ":")
            r.fail("expected 'list " + std::to_string(v) + ": c1 c2 ...'");
        std::vector<Color> list;
        for (std::size_t k = 2; k < tokens.size(); ++k) {
            int c = r.to_int(tokens[k]);
            if (c < 1 || c > q)
                r.fail("list color " + std::to_string(c) + " outside 1.." + std::to_string(q));
            if (std::find(list.begin(), list.end(), c) != list.end())
                r.fail("list repeats color " + std::to_string(c));
            list.push_back(c);
        }
        inst.lists.set(v, std::move(list));
    }
    inst.constraints = read_constraints(r, r.expect("'constraints count=<c>'"), inst.graph, inst.relation->r());
    r.expect_end();
    return inst;
}

std::string serialize_rclc(const RclcInstance& inst, const std::string& rel_spec)
{
    std::ostringstream out;
    out << "rclc\n";
    write_graph_block(out, inst.graph);
    write_rel(out, *inst.relation, rel_spec);
    for (int v = 1; v <= inst.graph.num_vertices(); ++v) {
        out << "list " << v << ':';
        for (Color c : inst.lists.list(v))
            out << ' ' << c;
        out << '\n';
    }
    write_constraints(out, inst.constraints);
    return out.str();
}

CliqueKvInstance parse_cliquekv(std::istream& in)
{
    LineReader r(in);
    auto header = r.expect("'cliquekv'");
    r.expect_keyword(header, "cliquekv", 1);
    Graph g = read_graph_block(r);
    auto tokens = r.expect("'modulator k=<k> ...'");
    if (tokens.front() != "modulator" || tokens.size() < 2)
        r.fail("expected 'modulator k=<k> x1 ... xk'");
    int k = nonnegative(r, r.key_value(tokens, 1, "k"), "k");
    if (tokens.size() != static_cast<std::size_t>(k) + 2)
        r.fail("modulator lists " + std::to_string(tokens.size() - 2) + " vertices, expected k=" + std::to_string(k));
    std::vector<Vertex> x;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        int v = r.to_int(tokens[i]);
        if (!g.contains(v))
            r.fail("modulator vertex " + std::to_string(v) + " out of range");
        x.push_back(v);
    }
    r.expect_end();
    try {
        return CliqueKvInstance::make(std::move(g), std::move(x));
    } catch (const Error& e) {
        r.fail(e.what());
    }
}

std::string serialize_cliquekv(const CliqueKvInstance& inst)
{
    std::ostringstream out;
    out << "cliquekv\n";
    write_graph_block(out, inst.graph);
    out << "modulator k=" << inst.modulator.size();
    for (Vertex x : inst.modulator)
        out << ' ' << x;
    out << '\n';
    return out.str();
}

CnfFormula parse_dimacs(std::istream& in)
{
    LineReader r(in, true);
    auto header = r.expect("'p cnf <vars> <clauses>'");
    if (header.size() != 4 || header[0] != "p" || header[1] != "cnf")
        r.fail("expected 'p cnf <vars> <clauses>'");
    CnfFormula f;
    f.num_vars = nonnegative(r, r.to_int(header[2]), "variable count");
    int m = nonnegative(r, r.to_int(header[3]), "clause count");
    std::vector<int> clause;
    std::vector<std::string> tokens;
    while (r.next(tokens)) {
        for (const auto& tok : tokens) {
            int lit = r.to_int(tok);
            if (lit == 0) {
                f.clauses.push_back(std::move(clause));
                clause.clear();
                continue;
            }
            if (std::abs(lit) > f.num_vars)
                r.fail("literal " + std::to_string(lit) + " exceeds the declared variable count");
            if (std::any_of(clause.begin(), clause.end(), [lit](int x) { return std::abs(x) == std::abs(lit); }))
                r.fail("clause mentions variable " + std::to_string(std::abs(lit)) + " twice");
            clause.push_back(lit);
        }
    }
    if (!clause.empty())
        r.fail("last clause is not terminated by 0");
    if (f.clauses.size() != static_cast<std::size_t>(m))
        r.fail("header declares " + std::to_string(m) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

std::string serialize_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string metadata_header(const std::vector<std::pair<std::string, std::string>>& entries)
{
    std::string out;
    for (const auto& [k, v] : entries)
        out += "# " + k + "=" + v + "\n";
    return out;
}

std::string sniff_kind(std::istream& in)
{
    LineReader r(in, true);
    std::vector<std::string> tokens;
    if (!r.next(tokens))
        throw ParseError(0, "empty input");
    return tokens.front();
}

} // namespace ccker
