#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "peel/cliques.hpp"
#include "peel/gen.hpp"
#include "peel/io.hpp"
#include "peel/rng.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace peel;

TEST_CASE("bitset basics against a reference set")
{
    Xoshiro256 rng(99);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + static_cast<int>(rng.below(130));
        std::set<int> ra, rb;
        Bitset a(n), b(n);
        for (int i = 0; i < n / 2; ++i) {
            int x = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            int y = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            a.set(x);
            ra.insert(x);
            b.set(y);
            rb.insert(y);
        }
        CHECK(a.count() == static_cast<int>(ra.size()));
        std::set<int> inter, uni, diff;
        for (int x : ra) {
            uni.insert(x);
            if (rb.count(x))
                inter.insert(x);
            else
                diff.insert(x);
        }
        for (int x : rb)
            uni.insert(x);
        CHECK((a & b).count() == static_cast<int>(inter.size()));
        CHECK((a | b).count() == static_cast<int>(uni.size()));
        CHECK((a - b).count() == static_cast<int>(diff.size()));
        std::vector<int> listed(ra.begin(), ra.end());
        CHECK(a.to_vector() == listed);
        CHECK(a.intersects(b) == !inter.empty());
    }
}

TEST_CASE("bitset lexicographic order")
{
    auto bs = [](std::vector<int> vs) { return Bitset::from_vector(8, vs); };
    CHECK(Bitset::compare_lex(bs({0, 1, 2}), bs({0, 1, 3})) < 0);
    CHECK(Bitset::compare_lex(bs({0, 1, 3}), bs({0, 2})) < 0);
    CHECK(Bitset::compare_lex(bs({1, 2}), bs({1, 2, 3})) < 0);
    CHECK(Bitset::compare_lex(bs({1, 2}), bs({1, 2})) == 0);
    CHECK(Bitset::compare_lex(bs({2}), bs({1, 5})) > 0);
}

TEST_CASE("dimacs parsing")
{
    Graph k3 = parse_dimacs_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(k3 == fixtures::complete(3));

    Graph e2 = parse_dimacs_text("p edge 2 0\n");
    CHECK(e2.n == 2);
    CHECK(e2.edge_count() == 0);

    CHECK_THROWS_AS(parse_dimacs_text("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_text("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_text("p foo 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_text("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_text("c only comments\n"), ParseError);

    try {
        parse_dimacs_text("p edge 2 1\ne 1 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    // duplicate edges collapse; comments skipped
    Graph dup = parse_dimacs_text("c twice\np edge 2 2\ne 1 2\ne 2 1\n");
    CHECK(dup.edge_count() == 1);

    // declared edge count disagreeing with the body warns but parses
    std::vector<std::string> warnings;
    Graph warned = parse_dimacs_text("p edge 3 5\ne 1 2\n", &warnings);
    CHECK(warned.edge_count() == 1);
    CHECK(warnings.size() == 1);
}

TEST_CASE("dimacs round trip on random graphs")
{
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_er(1 + static_cast<int>(seed % 12), 0.4, seed);
        Graph back = parse_dimacs_text(dimacs_string(g));
        CHECK(back == g);
    }
}

TEST_CASE("json graph round trip")
{
    Graph g = fixtures::petersen();
    CHECK(graph_from_json(graph_to_json(g)) == g);
    Multigraph h = fixtures::doubled_edge_triangle();
    Multigraph h2 = multigraph_from_json(multigraph_to_json(h));
    CHECK(h2.n == h.n);
    CHECK(h2.edges == h.edges);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("line graph")
{
    auto tri = line_graph(fixtures::triangle_multigraph());
    CHECK(tri.graph == fixtures::complete(3));
    CHECK(tri.edge_of_vertex.size() == 3);

    Multigraph doubled(3);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 2);
    doubled.add_edge(1, 2);
    CHECK(line_graph(doubled).graph == fixtures::complete(4));

    Multigraph single(2);
    single.add_edge(0, 1);
    CHECK(line_graph(single).graph == Graph(1));
}

TEST_CASE("line graph clique number dominates multigraph degree")
{
    // edges at a maximum-degree vertex form a clique of L(H)
    Xoshiro256 rng(5);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng.below(7));
        int m = 1 + static_cast<int>(rng.below(14));
        Multigraph h = gen_multigraph(n, m, rng.next());
        Graph l = line_graph(h).graph;
        CHECK(oracle::omega_subset_scan(l) >= h.max_degree());
    }
}

TEST_CASE("gen_er boundary probabilities and determinism")
{
    Graph empty = gen_er(4, 0.0, 123);
    CHECK(empty.edge_count() == 0);
    Graph full = gen_er(4, 1.0, 123);
    CHECK(full == fixtures::complete(4));

    Graph a = gen_er(10, 0.5, 42), b = gen_er(10, 0.5, 42);
    CHECK(a == b);
    CHECK(gen_er(10, 0.5, 43) != a);
    a.check_invariants();
}

TEST_CASE("gen_hypothesis plants cliques and meets its own hypothesis")
{
    Graph two_k4 = gen_hypothesis(4, 2, 0.0, 7);
    CHECK(two_k4 == fixtures::disjoint_union(fixtures::complete(4), fixtures::complete(4)));

    Graph isolated = gen_hypothesis(1, 3, 0.0, 7);
    CHECK(isolated.n == 3);
    CHECK(isolated.edge_count() == 0);

    // q > 0 with k = 1 can never add an edge: the degree cap is zero
    CHECK(gen_hypothesis(1, 3, 0.9, 11).edge_count() == 0);

    Xoshiro256 rng(17);
    for (int round = 0; round < 25; ++round) {
        int k = 1 + static_cast<int>(rng.below(4));
        int t = 1 + static_cast<int>(rng.below(3));
        double q = rng.unit() * 0.5;
        Graph g = gen_hypothesis(k, t, q, rng.next());
        g.check_invariants();
        int omega = oracle::omega_subset_scan(g);
        CHECK(omega == k);
        CHECK(4 * omega >= 3 * (g.max_degree() + 1));
    }

    CHECK_THROWS_AS(gen_hypothesis(0, 3, 0.0, 1), PreconditionError);
}

TEST_CASE("generator streams are pinned")
{
    // frozen outputs of the documented prng mapping; a change here means the
    // stream contract broke and every seeded result shifted
    CHECK(graph_to_json(gen_er(5, 0.5, 42)).dump() == R"({"edges":[[0,1],[0,2]],"n":5})");
    CHECK(graph_to_json(gen_hypothesis(3, 2, 0.5, 7)).dump() ==
          R"({"edges":[[0,1],[0,2],[0,4],[1,2],[2,3],[3,4],[3,5],[4,5]],"n":6})");
    CHECK(multigraph_to_json(gen_multigraph(4, 5, 11)).dump() ==
          R"({"edges":[[0,3],[0,1],[0,2],[0,3],[0,1]],"n":4})");
}

TEST_CASE("degree stats")
{
    CHECK(degree_stats(fixtures::complete(4)).max_degree == 3);
    CHECK(degree_stats(fixtures::cycle(5)).max_degree == 2);
    CHECK(degree_stats(Graph(0)).max_degree == 0);
    CHECK(degree_stats(fixtures::path(3)).sequence == std::vector<int>{1, 2, 1});
}

TEST_CASE("graph construction guards")
{
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
    Multigraph h(2);
    CHECK_THROWS_AS(h.add_edge(1, 1), PreconditionError);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), PreconditionError);
}

TEST_CASE("prng reference stream")
{
    // first outputs of splitmix64 from seed 0, fixed by the algorithm
    SplitMix64 sm(0);
    CHECK(sm.next() == 0xE220A8397B1DCDAFull);
    CHECK(sm.next() == 0x6E789E6AA1B965F4ull);

    Xoshiro256 a(12345), b(12345);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    double u = Xoshiro256(1).unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
