#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peel/coloring.hpp"
#include "peel/gen.hpp"
#include "peel/rng.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace peel;

TEST_CASE("verify_coloring accepts proper and rejects broken certificates")
{
    Graph c5 = fixtures::cycle(5);
    ColoringCertificate good{{0, 1, 0, 1, 2}, 3, std::nullopt};
    CHECK(verify_coloring(c5, good));

    ColoringCertificate adjacent_clash{{0, 0, 1, 0, 1}, 2, std::nullopt};
    CHECK(!verify_coloring(c5, adjacent_clash));

    ColoringCertificate unused_color{{0, 1, 0, 1, 0}, 3, std::nullopt};
    CHECK(!verify_coloring(c5, unused_color));

    ColoringCertificate out_of_range{{0, 1, 0, 1, 5}, 3, std::nullopt};
    CHECK(!verify_coloring(c5, out_of_range));
}

TEST_CASE("chromatic number on the named fixtures")
{
    CHECK(chromatic_number(Graph(0)).color_count == 0);
    CHECK(chromatic_number(Graph(4)).color_count == 1);
    CHECK(chromatic_number(fixtures::complete(4)).color_count == 4);
    CHECK(chromatic_number(fixtures::path(4)).color_count == 2);

    // C5: no proper 2-coloring exists (checked exhaustively), 3 suffice
    CHECK(!oracle::k_colorable_exhaustive(fixtures::cycle(5), 2));
    CHECK(chromatic_number(fixtures::cycle(5)).color_count == 3);

    // Petersen: exhaustive 2-coloring fails, explicit 3-coloring exists
    Graph pet = fixtures::petersen();
    CHECK(!oracle::k_colorable_exhaustive(pet, 2));
    ColoringCertificate cert = chromatic_number(pet);
    CHECK(cert.color_count == 3);
    CHECK(verify_coloring(pet, cert));
}

TEST_CASE("chromatic number matches the exhaustive oracle on random graphs")
{
    Xoshiro256 rng(606);
    for (int round = 0; round < 40; ++round) {
        Graph g = gen_er(1 + static_cast<int>(rng.below(7)), 0.3 + rng.unit() * 0.5, rng.next());
        ColoringCertificate cert = chromatic_number(g);
        CHECK(verify_coloring(g, cert));
        CHECK(cert.color_count == oracle::chromatic_exhaustive(g));
    }
}

TEST_CASE("dsatur greedy is proper")
{
    Xoshiro256 rng(71);
    for (int round = 0; round < 30; ++round) {
        Graph g = gen_er(2 + static_cast<int>(rng.below(12)), 0.5, rng.next());
        CHECK(verify_coloring(g, dsatur_greedy(g)));
    }
}

TEST_CASE("fractional chromatic number on the named fixtures")
{
    CHECK(fractional_chromatic(fixtures::complete(4)) == RationalValue{4, 1});

    // C5: the five maximal independent sets {i, i+2} admit weight 1/2 each,
    // and y_v = 1/2 packs the same total, so 5/2 is exact from both sides
    CHECK(fractional_chromatic(fixtures::cycle(5)) == RationalValue{5, 2});

    CHECK(fractional_chromatic(fixtures::petersen()) == RationalValue{5, 2});

    CHECK(fractional_chromatic(Graph(0)) == RationalValue{0, 1});
    CHECK(fractional_chromatic(Graph(6)) == RationalValue{1, 1});
    CHECK(fractional_chromatic(fixtures::cycle(7)) == RationalValue{7, 3});

    CHECK_THROWS_AS(fractional_chromatic(Graph(15)), ResourceError);
}

TEST_CASE("sandwich omega <= chi* <= chi on random graphs")
{
    Xoshiro256 rng(1234);
    for (int round = 0; round < 40; ++round) {
        Graph g = gen_er(1 + static_cast<int>(rng.below(10)), 0.2 + rng.unit() * 0.6, rng.next());
        RationalValue cs = fractional_chromatic(g);
        long long omega = clique_number(g);
        long long chi = chromatic_number(g).color_count;
        CHECK(omega * cs.den <= cs.num);
        CHECK(cs.num <= chi * cs.den);
    }
}

TEST_CASE("molloy-reed fractional bound on random graphs")
{
    Xoshiro256 rng(977);
    for (int round = 0; round < 40; ++round) {
        Graph g = gen_er(1 + static_cast<int>(rng.below(12)), 0.2 + rng.unit() * 0.6, rng.next());
        RationalValue cs = fractional_chromatic(g);
        CHECK(molloy_reed_holds(clique_number(g), g.max_degree(), cs));
    }
    // K4 attains it with equality: 2 * 4 = 4 + 3 + 1
    CHECK(molloy_reed_holds(4, 3, RationalValue{4, 1}));
    CHECK(!molloy_reed_holds(4, 3, RationalValue{9, 2}));
}

TEST_CASE("integer ceilings")
{
    CHECK(seven_sixths_bound(6) == 7);
    CHECK(seven_sixths_bound(2) == 3);
    CHECK(seven_sixths_bound(3) == 4); // ceil(21/6)
    CHECK(reed_bound(2, 2) == 3);      // ceil(5/2)
    CHECK(reed_bound(4, 3) == 4);
    CHECK(caprara_rizzi_floor(1) == 1); // floor(1.8)
    CHECK(caprara_rizzi_floor(2) == 2); // floor(2.9)
    CHECK(caprara_rizzi_floor(3) == 4); // floor(4.0)
}

TEST_CASE("section-3 arithmetic below the three-quarters threshold")
{
    // spot grid here; the acceptance suite sweeps omega, delta <= 200
    for (int omega = 1; omega <= 60; ++omega)
        for (int delta = 0; delta <= 60; ++delta)
            if (4 * omega < 3 * (delta + 1))
                CHECK(seven_sixths_bound(omega) <= reed_bound(omega, delta));
}

TEST_CASE("reed bound report on the named fixtures")
{
    BoundReport c5 = reed_bound_report(fixtures::cycle(5));
    CHECK(c5.omega == 2);
    CHECK(c5.delta == 2);
    CHECK(c5.chi == 3);
    CHECK(c5.reed_bound == 3); // tight
    CHECK(c5.seven_sixths == 3);
    CHECK(c5.reed_ok);
    CHECK(c5.seven_sixths_ok);
    CHECK(!c5.hypothesis_3_4);

    BoundReport k4 = reed_bound_report(fixtures::complete(4));
    CHECK(k4.reed_bound == 4);
    CHECK(k4.chi == 4);
    CHECK(k4.reed_ok);
    CHECK(k4.hypothesis_3_4);

    BoundReport pet = reed_bound_report(fixtures::petersen());
    CHECK(pet.reed_bound == 3);
    CHECK(pet.chi == 3);
    CHECK(pet.reed_ok);
}

TEST_CASE("theorem D recursion on the named fixtures")
{
    ColoringCertificate k4 = theorem_d_color(fixtures::complete(4), exact_chi_base);
    CHECK(k4.color_count == 4);
    CHECK(k4.bound_claimed == 4);
    CHECK(verify_coloring(fixtures::complete(4), k4));

    // diamond: peel {1}, color the path 0-2-3 with two colors, total 3 <= 4
    Graph dia = fixtures::diamond();
    ColoringCertificate dcert = theorem_d_color(dia, exact_chi_base);
    CHECK(dcert.color_count == 3);
    CHECK(dcert.bound_claimed == 4);
    CHECK(verify_coloring(dia, dcert));
    CHECK(dcert.colors[1] == dcert.color_count - 1); // the first peel took the last color

    // C5 fails the hypothesis immediately and goes to the base
    Graph c5 = fixtures::cycle(5);
    ColoringCertificate ccert = theorem_d_color(c5, exact_chi_base);
    CHECK(ccert.color_count == 3);
    CHECK(ccert.bound_claimed == 3);
    CHECK(verify_coloring(c5, ccert));

    CHECK(theorem_d_color(Graph(0), exact_chi_base).color_count == 0);
}

TEST_CASE("theorem D rejects contract-breaking base oracles")
{
    // wasteful base: one fresh color per vertex
    BaseColorer wasteful = [](const Graph& g) {
        ColoringCertificate cert;
        cert.colors.resize(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v)
            cert.colors[static_cast<std::size_t>(v)] = v;
        cert.color_count = g.n;
        return cert;
    };
    CHECK_THROWS_AS(theorem_d_color(fixtures::cycle(5), wasteful), OracleContractError);

    // improper base: one color for everything
    BaseColorer improper = [](const Graph& g) {
        return ColoringCertificate{std::vector<int>(static_cast<std::size_t>(g.n), 0), 1,
                                   std::nullopt};
    };
    CHECK_THROWS_AS(theorem_d_color(fixtures::cycle(5), improper), OracleContractError);
}

TEST_CASE("theorem D stays within the reed bound on generated graphs")
{
    Xoshiro256 rng(31337);
    for (int round = 0; round < 25; ++round) {
        int k = 1 + static_cast<int>(rng.below(5));
        int t = 1 + static_cast<int>(rng.below(4));
        Graph g = gen_hypothesis(k, t, rng.unit() * 0.3, rng.next());
        ColoringCertificate cert = theorem_d_color(g, exact_chi_base);
        CHECK(verify_coloring(g, cert));
        CHECK(cert.color_count <= reed_bound(clique_number(g), g.max_degree()));
    }
}

TEST_CASE("theorem D peels at most omega times")
{
    // peel count = total colors minus the base's colors, and omega drops by
    // one per peel, so the count must equal omega(G) - omega(base input)
    Xoshiro256 rng(808017);
    for (int round = 0; round < 15; ++round) {
        Graph g = gen_hypothesis(2 + static_cast<int>(rng.below(4)),
                                 1 + static_cast<int>(rng.below(4)), rng.unit() * 0.3, rng.next());
        int base_colors = 0, base_omega = 0;
        bool base_called = false;
        BaseColorer counting = [&](const Graph& residual) {
            base_called = true;
            base_omega = clique_number(residual);
            ColoringCertificate cert = exact_chi_base(residual);
            base_colors = cert.color_count;
            return cert;
        };
        ColoringCertificate cert = theorem_d_color(g, counting);
        int omega = clique_number(g);
        int peels = cert.color_count - (base_called ? base_colors : 0);
        CHECK(peels <= omega);
        if (base_called)
            CHECK(peels == omega - base_omega);
        else
            CHECK(peels == omega); // peeled all the way to the empty graph
    }
}

TEST_CASE("chromatic index")
{
    CHECK(chromatic_index(fixtures::triangle_multigraph()) == 3);
    CHECK(chromatic_index(fixtures::doubled_edge_triangle()) == 4);

    Multigraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(chromatic_index(star) == 3);

    CHECK(chromatic_index(Multigraph(3)) == 0);
    Multigraph big(10);
    for (int i = 0; i < 41; ++i)
        big.add_edge(i % 9, 9);
    CHECK_THROWS_AS(chromatic_index(big), ResourceError);
}

TEST_CASE("caprara-rizzi bound, all parts exact")
{
    CapraraRizziReport tri = caprara_rizzi_check(fixtures::triangle_multigraph());
    CHECK(tri.delta_h == 2);
    CHECK(tri.chi_line == 3);
    CHECK(tri.floor_bound == 2);
    CHECK(tri.chi_star == RationalValue{3, 1});
    CHECK(tri.ceil_chi_star == 3);
    CHECK(tri.omega_line == 3);
    CHECK(tri.main_holds); // 3 <= max(2, 3)
    CHECK(tri.delta_le_omega);
    CHECK(tri.floor_le_seven_sixths); // floor(4.0) = 4 = ceil(21/6)
    CHECK(tri.holds);

    Multigraph single(2);
    single.add_edge(0, 1);
    CapraraRizziReport s = caprara_rizzi_check(single);
    CHECK(s.chi_line == 1);
    CHECK(s.floor_bound == 1); // floor(1.8)
    CHECK(s.ceil_chi_star == 1);
    CHECK(s.holds);

    Multigraph doubled(2);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CapraraRizziReport d = caprara_rizzi_check(doubled); // L = K2
    CHECK(d.chi_line == 2);
    CHECK(d.delta_h == 2);
    CHECK(d.floor_bound == 2);
    CHECK(d.chi_star == RationalValue{2, 1});
    CHECK(d.main_holds); // 2 <= max(2, 2)
    CHECK(d.holds);

    CapraraRizziReport det = caprara_rizzi_check(fixtures::doubled_edge_triangle());
    CHECK(det.delta_h == 3);
    CHECK(det.chi_line == 4);
    CHECK(det.ceil_chi_star == 4);
    CHECK(det.holds);
}

TEST_CASE("line graphs of multigraphs satisfy the reed bound")
{
    // L(K3) = K3: omega 3, delta 2, so the bound is ceil(6/2) = 3, tight
    LineGraphReedReport tri = verify_line_graph_reed(fixtures::triangle_multigraph());
    CHECK(tri.chi == 3);
    CHECK(tri.omega == 3);
    CHECK(tri.delta == 2);
    CHECK(tri.bound == 3);
    CHECK(tri.holds);

    LineGraphReedReport det = verify_line_graph_reed(fixtures::doubled_edge_triangle());
    CHECK(det.chi == 4);
    CHECK(det.bound == 4); // tight
    CHECK(det.holds);

    Multigraph p2(3);
    p2.add_edge(0, 1);
    p2.add_edge(1, 2);
    LineGraphReedReport path = verify_line_graph_reed(p2);
    CHECK(path.chi == 2);
    CHECK(path.bound == 2);
    CHECK(path.holds);
}

TEST_CASE("certificate json")
{
    ColoringCertificate cert = chromatic_number(fixtures::cycle(5));
    nlohmann::json j = cert.to_json();
    CHECK(j["color_count"] == 3);
    CHECK(j["colors"].size() == 5);
    CHECK(j["bound_claimed"].is_null());
}
