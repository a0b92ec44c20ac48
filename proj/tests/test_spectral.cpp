#include <cmath>
#include <random>

#include "doctest.h"
#include "qsl/canonical.hpp"
#include "qsl/graph.hpp"
#include "qsl/spectral.hpp"

using namespace qsl;

namespace {

Graph random_connected(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) edges.push_back({u, v});
        Graph g(n, edges);
        if (components(g).size() == 1) return g;
    }
}

double perron_identity_sum(const Graph& g, const std::vector<double>& x) {
    double s = 0.0;
    for (const auto& [u, v] : g.edges()) s += (x[u] + x[v]) * (x[u] + x[v]);
    return s;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("q_index on regular and star graphs") {
    CHECK(q_index(cycle_graph(5)).q == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(q_index(star_graph(5)).q == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(q_index(path_graph(2)).q == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(q_index(path_graph(1)).q == 0.0);
    CHECK(q_index(edgeless_graph(4)).q == 0.0);
}

TEST_CASE("q_index of the small join families matches closed forms") {
    // apex joined to two matched pairs plus an isolated vertex: (7+sqrt(33))/2
    Graph g = join(path_graph(1), disjoint_union({path_graph(2), path_graph(1)}, {2, 1}));
    CHECK(q_index(g).q == doctest::Approx((7.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-10));
    CHECK(q_index(g).q == doctest::Approx(6.372281323269).epsilon(1e-10));

    // paw: apex joined to one pair plus an isolated vertex: (5+sqrt(17))/2
    Graph paw = join(path_graph(1), disjoint_union({path_graph(2), path_graph(1)}, {1, 1}));
    CHECK(q_index(paw).q == doctest::Approx(4.561552812809).epsilon(1e-10));
}

TEST_CASE("q_index handles disconnected graphs per component") {
    Graph g = disjoint_union({cycle_graph(3), path_graph(2), path_graph(1)}, {1, 1, 1});
    auto r = q_index(g);
    CHECK(r.q == doctest::Approx(4.0));
    REQUIRE(r.component_q.size() == 3);
    CHECK(r.component_q[0] == doctest::Approx(4.0));
    CHECK(r.component_q[1] == doctest::Approx(2.0));
    CHECK(r.component_q[2] == 0.0);
    // Perron mass sits on the triangle only.
    for (int v = 0; v < 3; ++v) CHECK(r.perron[v] > 0.0);
    for (int v = 3; v < 6; ++v) CHECK(r.perron[v] == 0.0);
    double norm = 0.0;
    for (double t : r.perron) norm += t * t;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("q_index residual certification") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 6));
        auto r = q_index(g, 1e-10);
        CHECK(r.residual <= 1e-8);
    }
    CHECK_THROWS_AS(q_index(path_graph(2), 1e-13), domain_error);
}

TEST_CASE("perron_vector positivity, symmetry, and identity") {
    auto p2 = perron_vector(path_graph(2));
    CHECK(p2[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(p2[1] == doctest::Approx(p2[0]).epsilon(1e-12));

    auto s = perron_vector(star_graph(4));
    CHECK(s[3] > s[0]);  // center outweighs leaves
    CHECK(s[0] == doctest::Approx(s[1]).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(s[2]).epsilon(1e-9));

    // Orbit equality in the apex-join family: pair vertices equal, lone
    // vertex distinct.
    Graph g = join(path_graph(1), disjoint_union({path_graph(2), path_graph(1)}, {2, 1}));
    auto x = perron_vector(g);
    for (int v = 2; v <= 4; ++v) CHECK(x[1] == doctest::Approx(x[v]).epsilon(1e-9));
    CHECK(x[0] > x[1]);
    CHECK(x[1] > x[5]);

    CHECK_THROWS_AS(perron_vector(disjoint_union({path_graph(2)}, {2})), domain_error);
    CHECK_THROWS_AS(perron_vector(path_graph(1)), domain_error);
}

TEST_CASE("Perron identity holds on random connected graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 7));
        auto r = q_index(g);
        CHECK(std::fabs(perron_identity_sum(g, r.perron) - r.q) <= 1e-8);
    }
}

TEST_CASE("degree_bound_report exact values") {
    auto c6 = degree_bound_report(cycle_graph(6));
    for (const auto& rec : c6.records) {
        CHECK(rec.degree == 2);
        CHECK(rec.m_v == Rat(2));
    }
    CHECK(c6.max_d_plus_m == Rat(4));
    CHECK(c6.average_degree_bounds_ok);
    CHECK(to_double(c6.max_d_plus_m) == doctest::Approx(q_index(cycle_graph(6)).q));

    auto s5 = degree_bound_report(star_graph(5));
    CHECK(s5.max_d_plus_m == Rat(5));
    CHECK(s5.records.back().degree == 4);  // center is the last label
    CHECK(s5.records.back().m_v == Rat(1));
    CHECK(s5.records.front().m_v == Rat(4));

    Graph paw = join(path_graph(1), disjoint_union({path_graph(2), path_graph(1)}, {1, 1}));
    auto rep = degree_bound_report(paw);
    CHECK(rep.max_d_plus_m == Rat(14, 3));
    CHECK(q_index(paw).q < to_double(rep.max_d_plus_m) - 1e-6);  // strict gap

    CHECK_THROWS_AS(degree_bound_report(edgeless_graph(3)), domain_error);
}

TEST_CASE("degree bound dominates q on random graphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 7));
        auto rep = degree_bound_report(g);
        CHECK(rep.average_degree_bounds_ok);
        CHECK(q_index(g).q <= to_double(rep.max_d_plus_m) + 1e-9);
    }
}

TEST_CASE("rotate_edges performs the edge move and validates input") {
    Graph p4 = path_graph(4);
    Graph rotated = rotate_edges(p4, 1, 2, {3});
    CHECK(is_isomorphic(rotated, star_graph(4)));
    CHECK(rotate_edges(p4, 1, 2, {}) == p4);

    CHECK_THROWS_AS(rotate_edges(p4, 1, 1, {3}), domain_error);
    CHECK_THROWS_AS(rotate_edges(p4, 1, 2, {0}), domain_error);  // 0 not adjacent to 2
    CHECK_THROWS_AS(rotate_edges(p4, 3, 2, {3}), domain_error);  // moved vertex equals target
    CHECK_THROWS_AS(rotate_edges(p4, 0, 2, {1}), domain_error);  // already adjacent to target
    CHECK_THROWS_AS(rotate_edges(disjoint_union(p4, path_graph(2)), 1, 2, {3}), domain_error);
}

TEST_CASE("rotation toward the heavier endpoint raises the index") {
    // Apex joined to three matched pairs; move one pair vertex's partner edge
    // onto a different pair.  Perron weights of the two endpoints tie by
    // symmetry, so the equality branch of the hypothesis is exercised.
    Graph g1 = join(path_graph(1), disjoint_union({path_graph(2)}, {3}));
    CHECK(check_rotation_monotonicity(g1, 3, 1, {2}));
    Graph g1r = rotate_edges(g1, 3, 1, {2});
    Graph expected = join(path_graph(1), disjoint_union(
        {path_graph(2), star_graph(3), path_graph(1)}, {1, 1, 1}));
    CHECK(is_isomorphic(g1r, expected));
}

TEST_CASE("random rotations satisfy the monotonicity property") {
    std::mt19937 rng(123);
    int done = 0;
    while (done < 15) {
        Graph g = random_connected(rng, 5 + static_cast<int>(rng() % 4), 0.4);
        auto x = perron_vector(g);
        // pick endpoints with x[u] >= x[v] and a movable vertex
        int n = g.vertex_count();
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (x[u] < x[v]) std::swap(u, v);
        std::vector<int> candidates;
        for (int w : g.neighbors(v))
            if (w != u && !g.has_edge(w, u)) candidates.push_back(w);
        if (candidates.empty()) continue;
        std::set<int> moved{candidates[rng() % candidates.size()]};
        Graph rotated = rotate_edges(g, u, v, moved);
        if (components(rotated).size() != 1) continue;
        CHECK(check_rotation_monotonicity(g, u, v, moved));
        ++done;
    }
}

TEST_CASE("subgraph monotonicity on random pairs") {
    std::mt19937 rng(3);
    int done = 0;
    while (done < 20) {
        Graph g = random_connected(rng, 5 + static_cast<int>(rng() % 5), 0.5);
        // drop a random edge; keep the result connected
        auto edges = g.edges();
        Graph h = remove_edges(g, {edges[rng() % edges.size()]});
        if (components(h).size() != 1) continue;
        CHECK(q_index(h).q < q_index(g).q - 1e-10);
        ++done;
    }
}

TEST_CASE("joining an apex strictly raises the index") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected(rng, 3 + static_cast<int>(rng() % 6));
        CHECK(q_index(join(path_graph(1), g)).q > q_index(g).q + 1e-10);
    }
}

}  // TEST_SUITE
