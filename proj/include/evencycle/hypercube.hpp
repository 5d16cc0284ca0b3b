#ifndef EVENCYCLE_HYPERCUBE_HPP
#define EVENCYCLE_HYPERCUBE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evencycle/bipartite_graph.hpp"
#include "evencycle/cycle_search.hpp"

namespace evencycle {

// Subsets of [n] are bitmasks (bit i <-> element i + 1); vectors of F_2^r
// are r-bit masks.

/// Position of a subset among all subsets of its size in colex order.
std::uint64_t colex_rank(std::uint32_t set);
std::uint64_t binomial(unsigned n, unsigned k);
/// All r-subsets of [n] in colex order.
std::vector<std::uint32_t> level_sets(unsigned n, unsigned r);

/// A bipartite graph whose vertices are subsets of [n] (or hypercube
/// vertices): left_sets[v] and right_sets[u] give the labels.
struct LabeledGraph {
    BipartiteGraph graph;
    std::vector<std::uint32_t> left_sets;
    std::vector<std::uint32_t> right_sets;
};

/// Layer of Q_n between levels r-1 (left) and r (right).
LabeledGraph build_layer(unsigned n, unsigned r);

/// Q_n with even-weight vertices on the left and odd-weight on the right.
LabeledGraph build_hypercube(unsigned n);

/// Rank over F_2 of the given vectors.
unsigned f2_rank(std::span<const std::uint32_t> vectors);
/// Exactly r vectors, linearly independent over F_2.
bool is_basis(std::span<const std::uint32_t> vectors, unsigned r);

struct GmParams {
    unsigned n = 0;
    unsigned r = 1;
    std::uint64_t seed = 0;
    std::uint32_t v0 = 1;  // e_1
};

struct GmSample {
    GmParams params;
    std::vector<std::uint32_t> vectors;  // v_1..v_n
    std::vector<std::uint32_t> br;       // r-sets whose vectors form a basis
    std::vector<std::uint32_t> brm1;     // (r-1)-sets completed to a basis by v0
    LabeledGraph layer_subgraph;         // induced on brm1 (left) and br (right)
};

/// Throws std::invalid_argument for even r, r > n, n > 20, or v0 outside
/// F_2^r minus zero.
GmSample gm_sample(const GmParams& params);

/// No C6 (exact search).
SearchStatus c6_search(const BipartiteGraph& g, const SearchOptions& opts = {});
bool verify_c6_free(const BipartiteGraph& g);

/// No simple 5-edge path whose endpoints are at Hamming distance 1 in Q_n,
/// whether or not that edge is present in the graph.
SearchStatus c6_minus_search(const LabeledGraph& f, std::uint64_t max_expansions = 0);
bool verify_c6_minus_free(const LabeledGraph& f);

struct GmTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t edges = 0;
    std::size_t layer_edges = 0;
    double density = 0;
    bool c6_free = false;
    bool c6_minus_free = false;
    std::size_t br_size = 0;
    std::size_t brm1_size = 0;
};

struct GmDensityStats {
    double mean_density = 0;
    double stdev = 0;
    std::vector<GmTrial> per_trial;
};

GmTrial gm_trial(unsigned n, unsigned r, std::uint64_t trial, std::uint64_t seed, std::uint32_t v0 = 1);
/// Trial t uses split_seed(seed, t).
GmDensityStats gm_density_stats(unsigned n, unsigned r, std::size_t trials, std::uint64_t seed);

/// `n,r,trial,seed,edges,layer_edges,density,c6_free,c6_minus_free`
std::string gm_csv_header();
std::string gm_csv_row(unsigned n, unsigned r, const GmTrial& t);

struct ExactHypercube {
    unsigned n = 0;
    std::size_t edges = 0;       // e(Q_n)
    std::size_t ex_c8 = 0;
    std::optional<std::size_t> exhaustive;  // n = 3 only
    std::size_t hitting_set = 0;
    std::size_t c8_count = 0;
    EdgeMask witness;            // C8-free subgraph of Q_n attaining ex_c8
};

/// ex(Q_n, C8) for n in {3, 4}. For n = 3 both methods run and must agree
/// (std::logic_error otherwise).
ExactHypercube exact_ex_qn_c8(unsigned n);

struct LayerProbe {
    unsigned r = 0;
    std::size_t edges = 0;
    std::size_t layer_edges = 0;
    double density = 0;
};

struct C10Probe {
    unsigned n = 0;
    std::uint64_t seed = 0;
    std::vector<LayerProbe> layers;
    std::size_t union_edges = 0;
    std::size_t cube_edges = 0;
    double global_density = 0;
    SearchStatus c10 = SearchStatus::Inconclusive;
    std::optional<CycleWitness> witness;
};

/// Union over odd r of sampled G_r inside Q_n, then a budgeted C10 search.
/// Layer r uses seed split_seed(seed, r).
C10Probe union_layers_c10_probe(unsigned n, std::uint64_t seed, std::uint64_t max_expansions = 0);

}  // namespace evencycle

#endif
