#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semireg/generators.hpp"
#include "semireg/multigraph.hpp"
#include "semireg/spectra.hpp"

using namespace semireg;

namespace {

Multigraph cycle(int n) {
    Multigraph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

Multigraph path(int n) {
    Multigraph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Multigraph k4() {
    Multigraph g;
    g.n = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.edges.emplace_back(i, j);
    return g;
}

std::vector<double> sorted_spectrum(const Multigraph& g) {
    return eigenvalues_sym(adjacency(g)).values;
}

}  // namespace

TEST_CASE("degree sequence: cycle, loop convention, rsrb") {
    auto d = degree_sequence(cycle(4));
    CHECK(d == std::vector<int>{2, 2, 2, 2});

    Multigraph loop1{1, {{0, 0}}};
    CHECK(degree_sequence(loop1) == std::vector<int>{1});

    RngStream rng(7);
    Multigraph g = generate_rsrb(RsrbParams{2, 3, 30}, rng);
    auto dg = degree_sequence(g);
    REQUIRE(dg.size() == 50);
    for (int v = 0; v < 30; ++v) CHECK(dg[v] == 2);
    for (int v = 30; v < 50; ++v) CHECK(dg[v] == 3);
}

TEST_CASE("adjacency: single edge, multiplicity, loop diagonal") {
    Multigraph e{2, {{0, 1}}};
    auto a = adjacency(e);
    CHECK(a.at(0, 0) == 0.0);
    CHECK(a.at(0, 1) == 1.0);
    CHECK(a.at(1, 0) == 1.0);

    Multigraph d2{2, {{0, 1}, {0, 1}}};
    CHECK(adjacency(d2).at(0, 1) == 2.0);

    Multigraph loop1{1, {{0, 0}}};
    CHECK(adjacency(loop1).at(0, 0) == 1.0);
}

TEST_CASE("laplacian: single edge, loop invariance, C4 circulant") {
    Multigraph e{2, {{0, 1}}};
    auto l = laplacian(e);
    CHECK(l.at(0, 0) == 1.0);
    CHECK(l.at(0, 1) == -1.0);

    Multigraph g = cycle(5);
    auto base = laplacian(g);
    Multigraph with_loops = g;
    with_loops.edges.emplace_back(0, 0);
    with_loops.edges.emplace_back(3, 3);
    with_loops.edges.emplace_back(3, 3);
    CHECK(laplacian(with_loops).a == base.a);

    auto c4 = laplacian(cycle(4));
    for (int i = 0; i < 4; ++i) {
        CHECK(c4.at(i, i) == 2.0);
        double row = 0;
        for (int j = 0; j < 4; ++j) row += c4.at(i, j);
        CHECK(row == 0.0);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle(5)));
    Multigraph two_edges{4, {{0, 1}, {2, 3}}};
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(complete_bipartite(CompleteBipartiteParams{2, 7})));
    Multigraph isolated{2, {}};
    CHECK_FALSE(is_connected(isolated));
}

TEST_CASE("girth: cycles, bipartite complete, trees, degenerate") {
    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(complete_bipartite(CompleteBipartiteParams{3, 6})) == 4);
    CHECK_FALSE(girth(path(7)).has_value());
    Multigraph loop1{1, {{0, 0}}};
    CHECK(girth(loop1) == 1);
    Multigraph d2{2, {{0, 1}, {0, 1}}};
    CHECK(girth(d2) == 2);
    CHECK(girth(k4()) == 3);
    // girth of the Petersen graph is 5
    Multigraph pet;
    pet.n = 10;
    for (int i = 0; i < 5; ++i) {
        pet.edges.emplace_back(i, (i + 1) % 5);
        pet.edges.emplace_back(i, i + 5);
        pet.edges.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    CHECK(girth(pet) == 5);
}

TEST_CASE("subdivide: C3 -> C6, counts, girth doubling") {
    Multigraph c3 = cycle(3);
    Multigraph s = subdivide(c3);
    CHECK(s.n == 6);
    CHECK(s.edge_count() == 6);
    CHECK(girth(s) == 6);
    auto deg = degree_sequence(s);
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));

    Multigraph has_loop{1, {{0, 0}}};
    CHECK_THROWS_AS(subdivide(has_loop), std::invalid_argument);

    // d-regular g on n vertices -> (2,d) semi-regular on n + nd/2 vertices
    RngStream rng(3);
    Multigraph g6 = rewire_to_simple(generate_regular(RegularParams{6, 40}, rng), rng);
    Multigraph s6 = subdivide(g6);
    CHECK(s6.n == 40 + 120);
    CHECK(s6.edge_count() == 240);
    auto hist = degree_histogram(s6);
    REQUIRE(hist.size() == 2);
    CHECK(hist[0] == std::pair<int, int>{2, 120});
    CHECK(hist[1] == std::pair<int, int>{6, 40});
}

TEST_CASE("girth doubles under subdivision on random simple graphs") {
    for (int trial = 0; trial < 50; ++trial) {
        RngStream rng(1000 + trial);
        Multigraph g = rewire_to_simple(generate_regular(RegularParams{3, 24}, rng), rng);
        auto base = girth(g);
        auto doubled = girth(subdivide(g));
        REQUIRE(base.has_value());
        CHECK(doubled == 2 * *base);
    }
}

TEST_CASE("contract_degree2: errors and round trips") {
    CHECK_THROWS_AS(contract_degree2(cycle(6)), std::invalid_argument);

    // subdivide(K4) contracts back to K4: same degree sequence and spectrum
    Multigraph g = k4();
    Multigraph rt = contract_degree2(subdivide(g));
    CHECK(degree_sequence(rt) == degree_sequence(g));
    auto s1 = sorted_spectrum(rt);
    auto s2 = sorted_spectrum(g);
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-12));

    // (2,6) semi-regular (simple, so girth > 2) contracts to a 6-regular multigraph
    RngStream rng(5);
    Multigraph rsrb = rewire_to_simple(generate_rsrb(RsrbParams{2, 6, 60}, rng), rng);
    Multigraph contracted = contract_degree2(rsrb);
    CHECK(contracted.n == 20);
    auto deg = degree_sequence(contracted);
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 6; }));

    // degree-2 vertex on a 2-cycle: vertex 1 has both edges to vertex 0
    Multigraph bad{2, {{0, 1}, {0, 1}, {0, 0}}};
    CHECK_THROWS_AS(contract_degree2(bad), std::invalid_argument);

    // chain of adjacent degree-2 vertices collapses fully
    Multigraph chain = subdivide(subdivide(k4()));
    Multigraph back = contract_degree2(chain);
    CHECK(degree_sequence(back) == degree_sequence(g));
}

TEST_CASE("rewire_to_simple: already simple unchanged, postconditions, impossibility") {
    RngStream rng(11);
    Multigraph simple = cycle(8);
    Multigraph same = rewire_to_simple(simple, rng);
    CHECK(same.edges == simple.edges);

    // pigeonhole case: one degree-6 vertex, three degree-2 neighbors
    RngStream rng2(12);
    Multigraph impossible = generate_rsrb(RsrbParams{2, 6, 3}, rng2);
    CHECK_THROWS_AS(rewire_to_simple(impossible, rng2), std::runtime_error);

    for (int trial = 0; trial < 20; ++trial) {
        RngStream t(100 + trial);
        Multigraph g = generate_rsrb(RsrbParams{2, 3, 300}, t);
        auto deg_before = degree_sequence(g);
        Multigraph s = rewire_to_simple(g, t);
        CHECK(s.is_simple());
        CHECK(degree_sequence(s) == deg_before);
        CHECK(s.edge_count() == g.edge_count());
        // bipartition classes survive: part-1 vertices keep degree 2
        auto parts = bipartition(s);
        REQUIRE(parts.has_value());
        for (auto [u, v] : s.edges) CHECK((*parts)[u] != (*parts)[v]);
    }
}

TEST_CASE("closed_walk_counts: basics and spectrum moments") {
    Multigraph loop1{1, {{0, 0}}};
    auto phi_loop = closed_walk_counts(loop1, 6);
    for (int s = 0; s <= 6; ++s) CHECK(phi_loop[s] == doctest::Approx(1.0));

    RngStream rng(21);
    Multigraph g = rewire_to_simple(generate_rsrb(RsrbParams{2, 3, 60}, rng), rng);
    auto phi = closed_walk_counts(g, 12);
    CHECK(phi[0] == 1.0);
    CHECK(phi[1] == 0.0);
    CHECK(phi[2] == doctest::Approx(2.4));  // average degree

    // moment check against the adjacency spectrum
    auto spec = sorted_spectrum(g);
    for (int s = 0; s <= 12; ++s) {
        double mom = 0;
        for (double lam : spec) mom += std::pow(lam, s);
        mom /= g.n;
        CHECK(phi[s] == doctest::Approx(mom).epsilon(1e-8));
    }
}

TEST_CASE("edge CSV round trip") {
    RngStream rng(31);
    Multigraph g = generate_rsr(RsrParams{0.4, 2, 3, 50}, rng);
    std::ostringstream out;
    write_edge_csv(g, out);
    std::istringstream in(out.str());
    Multigraph back = read_edge_csv(in);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    std::ostringstream out2;
    write_edge_csv(back, out2);
    CHECK(out.str() == out2.str());

    std::istringstream bad("x,y\n0,1\n");
    CHECK_THROWS(read_edge_csv(bad));
}

TEST_CASE("laplacian of generated graphs is positive semidefinite") {
    for (int trial = 0; trial < 10; ++trial) {
        RngStream rng(40 + trial);
        Multigraph g = generate_rsr(RsrParams{0.3, 2, 3, 40}, rng);
        auto s = eigenvalues_sym(laplacian(g));
        CHECK(s.values.front() >= -1e-9);
        CHECK(std::abs(s.values.front()) <= 1e-9);
    }
}
