#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "evencycle/hypercube.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

oracle::Adjacency adjacency_of(const BipartiteGraph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.left, e.right);
    return oracle::adjacency(g.left_count(), g.right_count(), edges);
}

// Pinned from the first run: n=10, r=3, 20 trials, seed 1.
constexpr double kMeanDensity10x3 = 0.30291666666666661;
constexpr double kStdev10x3 = 0.07708270770516884;

}  // namespace

TEST_CASE("subsets in colex order") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    const auto two = level_sets(5, 2);
    REQUIRE(two.size() == 10);
    CHECK(std::vector<std::uint32_t>(two.begin(), two.begin() + 4) == std::vector<std::uint32_t>{3, 5, 6, 9});
    for (std::size_t i = 0; i < two.size(); ++i) CHECK(colex_rank(two[i]) == i);
    CHECK(level_sets(4, 0) == std::vector<std::uint32_t>{0});
}

TEST_CASE("layers and cubes") {
    for (unsigned n = 2; n <= 7; ++n) {
        for (unsigned r = 1; r <= n; ++r) {
            const LabeledGraph layer = build_layer(n, r);
            CHECK(layer.graph.left_count() == binomial(n, r - 1));
            CHECK(layer.graph.right_count() == binomial(n, r));
            CHECK(layer.graph.edge_count() == r * binomial(n, r));
            for (const auto& e : layer.graph.edges()) {
                const std::uint32_t a = layer.left_sets[e.left], b = layer.right_sets[e.right];
                CHECK((a & b) == a);
                CHECK(std::popcount(a ^ b) == 1);
            }
        }
        const LabeledGraph cube = build_hypercube(n);
        CHECK(cube.graph.edge_count() == n * (std::size_t{1} << (n - 1)));
        CHECK(girth_bipartite(cube.graph) == 4u);
    }
    // Between singletons and pairs the shortest cycle is {1},{12},{2},{23},{3},{13}.
    const LabeledGraph l42 = build_layer(4, 2);
    CHECK(girth_bipartite(l42.graph) == 6u);
    CHECK(oracle::girth(adjacency_of(l42.graph), 8) == 6u);
    CHECK(girth_bipartite(build_layer(6, 3).graph) == 6u);
}

TEST_CASE("rank over F_2") {
    const std::uint32_t std3[] = {1, 2, 4};
    CHECK(is_basis(std3, 3));
    const std::uint32_t with_zero[] = {1, 0, 4};
    CHECK_FALSE(is_basis(with_zero, 3));
    const std::uint32_t repeat[] = {3, 3, 4};
    CHECK_FALSE(is_basis(repeat, 3));
    const std::uint32_t dependent[] = {3, 5, 6};
    CHECK(f2_rank(dependent) == 2);
    CHECK_FALSE(is_basis(dependent, 3));
    const std::uint32_t short_list[] = {1, 2};
    CHECK_FALSE(is_basis(short_list, 3));

    std::size_t library = 0, oracle_count = 0;
    for (std::uint32_t a = 1; a < 8; ++a) {
        for (std::uint32_t b = 1; b < 8; ++b) {
            for (std::uint32_t c = 1; c < 8; ++c) {
                const std::uint32_t v[] = {a, b, c};
                library += is_basis(v, 3);
                oracle_count += oracle::f2_det3(a, b, c);
            }
        }
    }
    CHECK(oracle_count == 168);  // 7 * 6 * 4
    CHECK(library == oracle_count);
}

TEST_CASE("GM samples") {
    const GmSample a = gm_sample(GmParams{8, 3, 42, 1});
    const GmSample b = gm_sample(GmParams{8, 3, 42, 1});
    CHECK(a.vectors == b.vectors);
    CHECK(a.br == b.br);
    CHECK(a.brm1 == b.brm1);
    CHECK(a.layer_subgraph.graph == b.layer_subgraph.graph);
    CHECK(a.vectors.size() == 8);
    for (auto v : a.vectors) {
        CHECK(v > 0);
        CHECK(v < 8);
    }
    for (auto s : a.br) {
        std::vector<std::uint32_t> vs;
        for (unsigned i = 0; i < 8; ++i) {
            if (s >> i & 1u) vs.push_back(a.vectors[i]);
        }
        CHECK(is_basis(vs, 3));
    }
    CHECK_THROWS_AS(gm_sample(GmParams{8, 2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gm_sample(GmParams{3, 5, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gm_sample(GmParams{8, 3, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gm_sample(GmParams{8, 3, 1, 8}), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const GmSample s = gm_sample(GmParams{8, 3, split_seed(1, seed), 1});
        CHECK(verify_c6_free(s.layer_subgraph.graph));
        CHECK(verify_c6_minus_free(s.layer_subgraph));
        CHECK_FALSE(oracle::has_cycle(adjacency_of(s.layer_subgraph.graph), 6));
    }
}

TEST_CASE("C6 minus detection") {
    const LabeledGraph cube = build_hypercube(3);
    // 000-001-011-111-110-100 closes to a 6-cycle through the edge 100-000.
    const std::uint32_t walk[] = {0, 1, 3, 7, 6, 4};
    auto edge_of = [&](std::uint32_t x, std::uint32_t y) {
        const std::uint32_t even = std::popcount(x) % 2 == 0 ? x : y;
        const std::uint32_t odd = even == x ? y : x;
        std::uint32_t l = 0, r = 0;
        while (cube.left_sets[l] != even) ++l;
        while (cube.right_sets[r] != odd) ++r;
        return *cube.graph.edge_index(l, r);
    };
    EdgeMask path(cube.graph.edge_count());
    for (int i = 0; i < 5; ++i) path.set(edge_of(walk[i], walk[i + 1]));
    const LabeledGraph p5{cube.graph.subgraph(path), cube.left_sets, cube.right_sets};
    CHECK(verify_c6_free(p5.graph));
    CHECK_FALSE(verify_c6_minus_free(p5));
    EdgeMask shorter = path;
    shorter.reset(edge_of(6, 4));
    const LabeledGraph p4{cube.graph.subgraph(shorter), cube.left_sets, cube.right_sets};
    CHECK(verify_c6_minus_free(p4));
    EdgeMask full(cube.graph.edge_count());
    full.set();
    CHECK_FALSE(verify_c6_free(cube.graph.subgraph(full)));
}

TEST_CASE("GM density statistics") {
    for (unsigned n : {4u, 7u, 10u}) {
        const GmDensityStats s = gm_density_stats(n, 1, 5, 3);
        CHECK(s.mean_density == 1.0);
        CHECK(s.stdev == 0.0);
    }
    const GmDensityStats s = gm_density_stats(10, 3, 20, 1);
    CHECK(s.per_trial.size() == 20);
    CHECK(std::abs(s.mean_density - kMeanDensity10x3) <= 3 * kStdev10x3 / std::sqrt(20.0));
    CHECK(s.stdev == doctest::Approx(kStdev10x3).epsilon(1e-9));
    CHECK(gm_csv_header() == "n,r,trial,seed,edges,layer_edges,density,c6_free,c6_minus_free");
    const GmTrial t = gm_trial(6, 1, 2, 9);
    CHECK(gm_csv_row(6, 1, t) == "6,1,2,9,6,6,1.000000000,1,1");
}

TEST_CASE("exact hypercube extremal numbers") {
    const ExactHypercube q3 = exact_ex_qn_c8(3);
    CHECK(q3.edges == 12);
    CHECK(q3.ex_c8 == 10);
    REQUIRE(q3.exhaustive);
    CHECK(*q3.exhaustive == q3.hitting_set);
    CHECK(q3.c8_count == 6);
    CHECK_THROWS_AS(exact_ex_qn_c8(5), std::invalid_argument);
}

TEST_CASE("C10 probe") {
    const C10Probe p4 = union_layers_c10_probe(4, 7);
    CHECK(p4.cube_edges == 32);
    CHECK(p4.c10 != SearchStatus::Inconclusive);
    CHECK(p4.layers.size() == 2);
    const C10Probe p2 = union_layers_c10_probe(2, 1);
    CHECK(p2.c10 == SearchStatus::NotFound);
    CHECK_THROWS_AS(union_layers_c10_probe(9, 1), std::invalid_argument);
    const C10Probe capped = union_layers_c10_probe(8, 1, 10);
    CHECK(capped.c10 == SearchStatus::Inconclusive);
}
