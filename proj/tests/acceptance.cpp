// Acceptance harness: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "ccker/polykernel.hpp"
#include "ccker/random_instances.hpp"
#include "ccker/reductions.hpp"

using namespace ccker;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kCaptureSecondsPerShape = 5.0;
constexpr double kKernelSuiteSeconds = 120.0;
constexpr double kReductionSuiteSeconds = 300.0;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && pass)
            detail << " first failure: " << what << ";";
        pass = pass && cond;
    }
};

int g_failures = 0;

void report(int id, const std::string& name, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " exception: " << e.what() << ";";
    }
    std::printf("criterion %d %s: %s (%.2fs)%s\n", id, out.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(start),
                out.detail.str().c_str());
    std::fflush(stdout);
    g_failures += !out.pass;
}

int item_degree(int item, int d, int l)
{
    return item == 1 ? d - 1 : item == 2 ? (d - 1) * l : d * l - 1;
}

int item_m(int item, int d, int q)
{
    return item == 1 ? d : q;
}

bool captures_by_enumeration(const CapturePair& cp, int d, int l, int q)
{
    bool ok = true;
    std::vector<PrimeField::Elem> point(static_cast<std::size_t>(cp.m * d * l));
    brute::for_each_coloring(d * l, q, [&](const brute::Coloring& colors) {
        for (int c = 0; c < d * l; ++c)
            for (int i = 0; i < cp.m; ++i)
                point[c * cp.m + i] = cp.colors[colors[c] - 1][i];
        if ((cp.poly.evaluate(point) != 0) != brute::ur_matrix(colors, d, l))
            ok = false;
    });
    return ok;
}

// ---- 1 ----
void capture_property(Outcome& out)
{
    const UrfcShape shapes[] = {{2, 1, 3}, {3, 1, 4}, {2, 2, 2}, {2, 2, 3}, {3, 2, 3}, {2, 3, 3}, {3, 2, 4}};
    double slowest = 0;
    int checked = 0;
    for (auto s : shapes) {
        for (int item : capture_items(s.d, s.l, s.q)) {
            auto start = Clock::now();
            auto cp = build_capture(s.d, s.l, s.q, PrimeField::at_least(s.q), item);
            bool ok = check_captures(cp, s.d, s.l, s.q);
            double secs = seconds_since(start);
            slowest = std::max(slowest, secs);
            std::string tag = "(" + std::to_string(s.d) + "," + std::to_string(s.l) + "," + std::to_string(s.q) +
                              ") item " + std::to_string(item);
            out.require(ok, tag + " does not capture");
            out.require(captures_by_enumeration(cp, s.d, s.l, s.q), tag + " fails independent evaluation");
            out.require(secs < kCaptureSecondsPerShape, tag + " slower than 5s");
            out.require(cp.poly.degree() <= item_degree(item, s.d, s.l), tag + " degree above bound");
            ++checked;
        }
    }
    out.detail << " " << checked << " (shape,item) pairs, slowest " << slowest << "s;";
}

// ---- 2 ----
int eta_literal(int d, int l, int q, int* fired)
{
    int value = -1;
    *fired = 0;
    auto hit = [&](bool cond, int v) {
        if (cond) {
            ++*fired;
            value = v;
        }
    };
    hit(l >= 2 && q >= d + 2, d * l);
    hit(l >= 2 && q == d + 1 && !(d == 1 && l == 2), d * l - 1);
    hit((l >= 2 && q == d && d >= 2) || (l == 1 && d >= 3), (d - 1) * l);
    hit(l == 1 && d <= 2 && q >= 3, 2);
    hit((q == 2 && d * l <= 2) || q == 1, 0);
    return value;
}

void exponent_table(Outcome& out)
{
    int triples = 0;
    for (int d = 1; d <= 6; ++d)
        for (int l = 1; l <= 6; ++l)
            for (int q = d; q <= 12; ++q) {
                int fired = 0;
                int expected = eta_literal(d, l, q, &fired);
                out.require(fired == 1, "case count != 1");
                out.require(eta(d, l, q) == expected, "eta mismatch");
                ++triples;
            }
    for (int q = 3; q <= 12; ++q)
        for (int t = 1; t <= q; ++t) {
            int best = 0;
            for (int l = 1; l <= t; ++l) {
                int fired = 0;
                best = std::max(best, eta_literal(q - l + 1, l, q, &fired));
            }
            out.require(r_clique(q, t) == best, "r_clique max formula");
            out.require(r_clique_closed_form(q, t) == best, "r_clique closed form");
        }
    out.require(eta(1, 2, 3) == 2 && eta(2, 2, 3) == 3, "eta spot values");
    out.require(r_clique(3, 3) == 3 && r_clique(5, 5) == 9, "r_clique spot values");
    out.detail << " " << triples << " eta triples, 75 (q,t) pairs;";
}

// ---- 3 and 4 ----
struct KernelStats {
    bool sound = true;
    bool bounded = true;
    int instances = 0;
    std::string first_problem;
    double seconds = 0;
    std::ostringstream dense;
    bool dense_ok = true;
};

KernelStats& kernel_stats()
{
    static KernelStats stats = [] {
        KernelStats s;
        auto start = Clock::now();
        const UrfcShape shapes[] = {{2, 2, 3}, {3, 2, 3}, {2, 3, 3}, {1, 2, 3}};
        const double densities[] = {0.05, 0.2, 0.5, 1.0};
        Rng rng(20240601);
        for (auto sh : shapes) {
            for (int i = 0; i < 100; ++i) {
                int n = sh.d + 1 + i % (7 - sh.d);
                auto inst = random_urfc(n, sh.d, sh.l, sh.q, densities[i % 4], 0.15, rng);
                auto k = kernelize_urfc(inst);
                bool same = solve_urfc(inst) == solve_urfc(k.instance) &&
                            brute::urfc(inst) == brute::urfc(k.instance);
                std::uint64_t bound = k.meta.bound;
                if (k.meta.method == "poly") {
                    int item = k.meta.capture_item;
                    int m = item_m(item, sh.d, sh.q);
                    int r = item_degree(item, sh.d, sh.l);
                    bound = binomial(static_cast<std::uint64_t>(m * n + r), static_cast<std::uint64_t>(r));
                }
                bool within = k.instance.block.tuples.size() <= bound;
                if ((!same || !within) && s.first_problem.empty())
                    s.first_problem = "shape (" + std::to_string(sh.d) + "," + std::to_string(sh.l) + "," +
                                      std::to_string(sh.q) + ") instance " + std::to_string(i);
                s.sound = s.sound && same;
                s.bounded = s.bounded && within;
                ++s.instances;
            }
        }
        s.seconds = seconds_since(start);
        for (int n : {5, 6, 7}) {
            auto inst = random_urfc(n, 2, 2, 3, 1.0, 0.0, rng);
            auto k = kernelize_urfc(inst);
            std::size_t trivial = inst.block.tuples.size();
            std::uint64_t bound = binomial(static_cast<std::uint64_t>(3 * n + 3), 3);
            std::size_t kept = k.instance.block.tuples.size();
            if (trivial > bound)
                s.dense_ok = s.dense_ok && kept < trivial;
            s.dense_ok = s.dense_ok && kept <= bound;
            s.dense << " n=" << n << ": trivial=" << trivial << " kept=" << kept << " bound=" << bound << ";";
        }
        return s;
    }();
    return stats;
}

void kernel_soundness(Outcome& out)
{
    auto& s = kernel_stats();
    out.require(s.sound, "solution sets differ at " + s.first_problem);
    out.require(s.seconds < kKernelSuiteSeconds, "suite slower than 2 min");
    out.detail << " " << s.instances << " instances, suite " << s.seconds << "s;";
}

void kernel_size(Outcome& out)
{
    auto& s = kernel_stats();
    out.require(s.bounded, "bound exceeded at " + s.first_problem);
    out.require(s.dense_ok, "dense instances not reduced");
    out.detail << s.dense.str();
}

// ---- 5 ----
void reduction_soundness(Outcome& out)
{
    auto start = Clock::now();
    auto rel = std::make_shared<const Relation>(make_nur(1, 3, 5));
    OrWitness w = nur_or_witness(1, 3, 5, 1);
    Rng rng(777);
    int sat = 0;
    int nae = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 3 + i % 4;
        int m = 1 + static_cast<int>(rng.uniform(0, 5 * n));
        auto f = random_cnf(n, 3, m, rng);
        bool is_sat = brute::cnf_sat(f, false);
        bool is_nae = brute::cnf_sat(f, true);
        sat += is_sat;
        nae += is_nae;
        auto a = sat_to_rclc(f, rel, w);
        bool rclc_yes = !solve_rclc(a.instance, 1).empty();
        auto b = rclc_to_rcc(a.instance);
        bool rcc_yes = !solve_rcc(b.instance, 1).empty();
        out.require(rclc_yes == is_sat, "sat_to_rclc formula " + std::to_string(i));
        out.require(rcc_yes == is_sat, "rclc_to_rcc formula " + std::to_string(i));
        for (auto variant : {NaeVariant::Singletons, NaeVariant::Pairs}) {
            auto u = nae_to_urfc(f, 3, variant);
            out.require(!solve_urfc(u.instance, 1).empty() == is_nae, "nae_to_urfc formula " + std::to_string(i));
        }
    }
    int colorable = 0;
    for (int i = 0; i < 100; ++i) {
        auto inst = random_urfc(2 + i % 4, 1, 3, 3, 0.05 + 0.05 * (i % 5), 0.3, rng);
        auto h = urfc_to_hypergraph(inst);
        bool yes = !brute::urfc(inst).empty();
        colorable += yes;
        out.require(h.hypergraph.is_uniform(3), "hypergraph not 3-uniform");
        out.require(!brute::hypergraph(h.hypergraph, 3).empty() == yes, "urfc_to_hypergraph instance " + std::to_string(i));
    }
    double secs = seconds_since(start);
    out.require(secs < kReductionSuiteSeconds, "suite slower than 5 min");
    out.detail << " 100 formulas (" << sat << " SAT, " << nae << " NAE), 100 hypergraph instances (" << colorable
               << " YES);";
}

// ---- 6 ----
void clique_pipeline(Outcome& out)
{
    Rng rng(4242);
    int instances = 0;
    int yes = 0;
    long long extensions = 0;
    for (int i = 0; i < 100; ++i) {
        int t = 1 + i % 3;
        int k = 1 + rng.uniform(0, 5);
        int cliques = 1 + rng.uniform(0, 3);
        auto inst = random_cliquekv(k, cliques, std::min(t, 4), 0.3, 0.5, rng);
        auto ker = kernelize_cliquekv(inst, 3, t);
        bool before = brute::colorable(inst.graph, 3);
        bool after = !solve_graph_qcol(ker.instance.graph, 3, 1).empty();
        yes += before;
        out.require(before == !solve_graph_qcol(inst.graph, 3, 1).empty(), "oracles disagree on input");
        out.require(before == after, "colorability changed on instance " + std::to_string(i));
        int r = r_clique(3, t);
        std::uint64_t bound = static_cast<std::uint64_t>(k) +
                              static_cast<std::uint64_t>(t) * binomial(static_cast<std::uint64_t>(3 * k + r), r);
        out.require(static_cast<std::uint64_t>(ker.instance.graph.num_vertices()) <= bound,
                    "vertex bound on instance " + std::to_string(i));

        auto red = extract_clique_constraints(inst, 3, t);
        Graph gx = inst.graph.induced(inst.modulator);
        brute::for_each_coloring(inst.k(), 3, [&](const Coloring& cx) {
            if (!brute::proper(gx, cx))
                return;
            Coloring c(static_cast<std::size_t>(inst.graph.num_vertices()), 0);
            for (int j = 0; j < inst.k(); ++j)
                c[inst.modulator[j] - 1] = cx[j];
            bool extends = extend_to_cliques(inst, 3, c).has_value();
            bool no_rainbow = true;
            for (const auto& b : red.instance.blocks)
                for (const auto& tuple : b.tuples)
                    no_rainbow = no_rainbow && !brute::ur_tuple(tuple, cx);
            out.require(extends == no_rainbow, "extension equivalence on instance " + std::to_string(i));
            ++extensions;
        });
        ++instances;
    }
    out.detail << " " << instances << " instances (" << yes << " colorable), " << extensions
               << " modulator colorings checked;";
}

// ---- 7 ----
bool has_full_product(const std::vector<std::vector<Vertex>>& f)
{
    std::set<std::vector<Vertex>> set(f.begin(), f.end());
    for (const auto& a : f)
        for (const auto& b : f) {
            if (a[0] == b[0] || a[1] == b[1] || a[2] == b[2])
                continue;
            bool full = true;
            for (int mask = 0; mask < 8 && full; ++mask)
                full = set.count({mask & 1 ? b[0] : a[0], mask & 2 ? b[1] : a[1], mask & 4 ? b[2] : a[2]}) > 0;
            if (full)
                return true;
        }
    return false;
}

void carbonnel(Outcome& out)
{
    auto rel = std::make_shared<const Relation>(make_nur(1, 3, 2));
    auto member = [&](const std::vector<int>& t) { return rel->contains(t); };
    out.require(!brute::has_or(member, 2, 3, 3) && max_or_arity(*rel) < 3, "relation defines an arity-3 OR");
    Rng rng(99);
    int with_products = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 3 + i % 4;
        auto inst = random_rcc(n, rel, 4 + rng.uniform(0, 20), 0.15, rng);
        if (i % 2 == 0) {
            // Plant a full product.
            std::vector<Vertex> a{rng.uniform(1, n), rng.uniform(1, n), rng.uniform(1, n)};
            std::vector<Vertex> b{rng.uniform(1, n), rng.uniform(1, n), rng.uniform(1, n)};
            for (int j = 0; j < 3; ++j)
                if (a[j] == b[j])
                    b[j] = a[j] % n + 1;
            for (int mask = 0; mask < 8; ++mask)
                inst.constraints.push_back({mask & 1 ? b[0] : a[0], mask & 2 ? b[1] : a[1], mask & 4 ? b[2] : a[2]});
        }
        with_products += has_full_product(inst.constraints);
        auto k = kernelize_carbonnel(inst);
        out.require(!has_full_product(k.constraints), "full product survives on instance " + std::to_string(i));
        out.require(brute::rcc(inst) == brute::rcc(k), "solution sets differ on instance " + std::to_string(i));
    }
    out.detail << " max_or_arity(NUR(1,3,2))=" << max_or_arity(*rel) << ", 100 instances (" << with_products
               << " with full products);";
}

// ---- 8 ----
void gadgets(Outcome& out)
{
    int combos = 0;
    for (int q = 3; q <= 4; ++q)
        for (int a1 = 1; a1 <= q; ++a1)
            for (int a2 = 1; a2 <= q; ++a2)
                for (bool base_edge : {false, true}) {
                    Graph base(2);
                    if (base_edge)
                        base.add_edge(1, 2);
                    auto [g, lists] = forbid_pair_gadget(base, ListAssignment(q, 2), 1, 2, a1, a2);
                    RclcInstance inst{g, lists, std::make_shared<const Relation>(Relation::full(q, 1)), {}};
                    std::set<std::pair<int, int>> extendable;
                    for (const auto& c : brute::rclc(inst))
                        extendable.insert({c[0], c[1]});
                    for (int c1 = 1; c1 <= q; ++c1)
                        for (int c2 = 1; c2 <= q; ++c2) {
                            if (base_edge && c1 == c2)
                                continue;
                            bool expect = !(c1 == a1 && c2 == a2);
                            out.require(extendable.count({c1, c2}) == (expect ? 1u : 0u),
                                        "q=" + std::to_string(q) + " pair " + std::to_string(a1) + "," +
                                            std::to_string(a2));
                        }
                    ++combos;
                }
    out.detail << " " << combos << " (q, a1, a2, base) combinations;";
}

// ---- 9 ----
void witnesses(Outcome& out)
{
    int validated = 0;
    for (int q = 1; q <= 1000; ++q)
        for (int d = 1; d <= q; ++d)
            for (int l = 1; l <= 24; ++l) {
                if (saturating_pow(q, d * l) > 1'000'000)
                    break;
                Relation rel = make_nur(d, l, q);
                for (int item = 1; item <= 3; ++item) {
                    OrWitness w;
                    try {
                        w = nur_or_witness(d, l, q, item);
                    } catch (const PreconditionError&) {
                        continue;
                    }
                    out.require(witness_holds(w, rel), "witness (" + std::to_string(d) + "," + std::to_string(l) +
                                                           "," + std::to_string(q) + ") item " + std::to_string(item));
                    ++validated;
                }
            }
    // (3,4,3) fits the relation budget; (3,4,4) and (3,4,5) are checked against
    // the membership predicate directly.
    out.require(witness_holds(nur_or_witness(3, 4, 3, 3), make_nur(3, 4, 3)), "(3,4,3) item 3");
    auto member = [](std::span<const int> t) { return brute::nur_member(std::vector<int>(t.begin(), t.end()), 3, 4); };
    out.require(witness_holds(nur_or_witness(3, 4, 4, 2), 4, 12, member), "(3,4,4) item 2");
    out.require(witness_holds(nur_or_witness(3, 4, 5, 1), 5, 12, member), "(3,4,5) item 1");
    out.require(witness_holds(nur_or_witness(3, 4, 5, 2), 5, 12, member), "(3,4,5) item 2");
    out.detail << " " << validated << " (shape,item) witnesses with q^(dl) <= 10^6 plus (3,4,q) for q in {3,4,5};";
}

} // namespace

int main()
{
    report(1, "capture property by full enumeration, < 5s per shape, degree bounds", capture_property);
    report(2, "exponent table and r_clique closed form", exponent_table);
    report(3, "kernel soundness, 4 shapes x 100 instances, < 2 min", kernel_soundness);
    report(4, "kernel size within binom(mn+r, r)", kernel_size);
    report(5, "reduction soundness, < 5 min", reduction_soundness);
    report(6, "clique-modulator pipeline, q=3", clique_pipeline);
    report(7, "product-pruning kernel without arity-3 OR", carbonnel);
    report(8, "forbid-pair gadget exhaustiveness, q in {3,4}", gadgets);
    report(9, "OR witness constructions", witnesses);
    std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
