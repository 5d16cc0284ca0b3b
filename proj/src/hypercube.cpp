#include "evencycle/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evencycle/certificates.hpp"

namespace evencycle {

namespace {

constexpr unsigned kMaxN = 20;

void check_n(unsigned n) {
    if (n == 0 || n > kMaxN) throw std::invalid_argument("hypercube dimension must lie in [1, 20]");
}

std::uint32_t next_same_weight(std::uint32_t x) {
    // Gosper's hack
    const std::uint32_t c = x & (~x + 1);
    const std::uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

std::string fixed(double x, int places) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(places);
    ss << x;
    return ss.str();
}

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t colex_rank(std::uint32_t set) {
    std::uint64_t rank = 0;
    unsigned k = 0;
    while (set) {
        const unsigned pos = static_cast<unsigned>(std::countr_zero(set));
        rank += binomial(pos, ++k);
        set &= set - 1;
    }
    return rank;
}

std::vector<std::uint32_t> level_sets(unsigned n, unsigned r) {
    check_n(n);
    if (r > n) throw std::invalid_argument("level r exceeds n");
    std::vector<std::uint32_t> sets;
    sets.reserve(binomial(n, r));
    if (r == 0) {
        sets.push_back(0);
        return sets;
    }
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t x = (std::uint32_t{1} << r) - 1; x < limit; x = next_same_weight(x)) sets.push_back(x);
    return sets;
}

LabeledGraph build_layer(unsigned n, unsigned r) {
    check_n(n);
    if (r < 1 || r > n) throw std::invalid_argument("layer needs 1 <= r <= n");
    LabeledGraph out;
    out.left_sets = level_sets(n, r - 1);
    out.right_sets = level_sets(n, r);
    std::vector<Edge> edges;
    edges.reserve(r * out.right_sets.size());
    for (std::uint32_t u = 0; u < out.right_sets.size(); ++u) {
        const std::uint32_t t = out.right_sets[u];
        for (std::uint32_t bits = t; bits; bits &= bits - 1) {
            const std::uint32_t s = t ^ (bits & (~bits + 1));
            edges.push_back(Edge{static_cast<std::uint32_t>(colex_rank(s)), u});
        }
    }
    out.graph = BipartiteGraph(static_cast<std::uint32_t>(out.left_sets.size()),
                               static_cast<std::uint32_t>(out.right_sets.size()), std::move(edges));
    return out;
}

LabeledGraph build_hypercube(unsigned n) {
    check_n(n);
    LabeledGraph out;
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<std::uint32_t> slot(size);
    for (std::uint32_t v = 0; v < size; ++v) {
        auto& side = std::popcount(v) % 2 == 0 ? out.left_sets : out.right_sets;
        slot[v] = static_cast<std::uint32_t>(side.size());
        side.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::uint32_t v : out.left_sets) {
        for (unsigned b = 0; b < n; ++b) edges.push_back(Edge{slot[v], slot[v ^ (1u << b)]});
    }
    out.graph = BipartiteGraph(static_cast<std::uint32_t>(out.left_sets.size()),
                               static_cast<std::uint32_t>(out.right_sets.size()), std::move(edges));
    return out;
}

unsigned f2_rank(std::span<const std::uint32_t> vectors) {
    // xor basis indexed by leading bit
    std::uint32_t basis[32] = {};
    unsigned rank = 0;
    for (std::uint32_t v : vectors) {
        for (int bit = 31; bit >= 0 && v; --bit) {
            if (!((v >> bit) & 1u)) continue;
            if (!basis[bit]) {
                basis[bit] = v;
                ++rank;
                v = 0;
            } else {
                v ^= basis[bit];
            }
        }
    }
    return rank;
}

bool is_basis(std::span<const std::uint32_t> vectors, unsigned r) {
    if (r > 32) throw std::invalid_argument("vectors are limited to 32 bits");
    if (vectors.size() != r) return false;
    const std::uint64_t limit = std::uint64_t{1} << r;
    for (std::uint32_t v : vectors) {
        if (v >= limit) return false;
    }
    return f2_rank(vectors) == r;
}

GmSample gm_sample(const GmParams& params) {
    const unsigned n = params.n;
    const unsigned r = params.r;
    check_n(n);
    if (r % 2 == 0 || r > n) throw std::invalid_argument("GM sampling needs odd r <= n");
    const std::uint32_t space = (std::uint32_t{1} << r) - 1;  // nonzero vectors
    if (params.v0 == 0 || params.v0 > space) throw std::invalid_argument("v0 must be a nonzero vector of F_2^r");

    GmSample out;
    out.params = params;
    for (unsigned i = 0; i < n; ++i) {
        out.vectors.push_back(static_cast<std::uint32_t>(1 + uniform_below(space, params.seed, 0, i)));
    }
    std::vector<std::uint32_t> buf;
    auto vectors_of = [&](std::uint32_t set) {
        buf.clear();
        for (std::uint32_t bits = set; bits; bits &= bits - 1) buf.push_back(out.vectors[std::countr_zero(bits)]);
    };
    for (std::uint32_t t : level_sets(n, r)) {
        vectors_of(t);
        if (is_basis(buf, r)) out.br.push_back(t);
    }
    for (std::uint32_t s : level_sets(n, r - 1)) {
        vectors_of(s);
        buf.push_back(params.v0);
        if (is_basis(buf, r)) out.brm1.push_back(s);
    }

    // induced subgraph; brm1 is colex-sorted so positions come from a rank table
    std::vector<std::uint32_t> position(binomial(n, r - 1), UINT32_MAX);
    for (std::uint32_t i = 0; i < out.brm1.size(); ++i) position[colex_rank(out.brm1[i])] = i;
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < out.br.size(); ++u) {
        const std::uint32_t t = out.br[u];
        for (std::uint32_t bits = t; bits; bits &= bits - 1) {
            const std::uint32_t p = position[colex_rank(t ^ (bits & (~bits + 1)))];
            if (p != UINT32_MAX) edges.push_back(Edge{p, u});
        }
    }
    out.layer_subgraph.left_sets = out.brm1;
    out.layer_subgraph.right_sets = out.br;
    out.layer_subgraph.graph = BipartiteGraph(static_cast<std::uint32_t>(out.brm1.size()),
                                              static_cast<std::uint32_t>(out.br.size()), std::move(edges));
    return out;
}

SearchStatus c6_search(const BipartiteGraph& g, const SearchOptions& opts) {
    return find_cycle_of_length(g, 6, opts).status;
}

bool verify_c6_free(const BipartiteGraph& g) { return c6_search(g) == SearchStatus::NotFound; }

namespace {

struct PathSearch {
    const LabeledGraph& f;
    std::vector<char> on_path;
    std::uint64_t expansions = 0;
    std::uint64_t limit = 0;
    bool exhausted = false;

    std::uint32_t label(std::uint32_t unified) const {
        const Vertex v = f.graph.vertex(unified);
        return v.side == Side::Left ? f.left_sets[v.index] : f.right_sets[v.index];
    }

    // true when a qualifying path is found
    bool extend(std::uint32_t start, std::uint32_t tail, unsigned remaining) {
        for (std::uint32_t w : f.graph.neighbors(tail)) {
            if (on_path[w]) continue;
            if (limit != 0 && ++expansions > limit) {
                exhausted = true;
                return false;
            }
            if (remaining == 1) {
                if (std::popcount(label(start) ^ label(w)) == 1) return true;
                continue;
            }
            on_path[w] = 1;
            const bool hit = extend(start, w, remaining - 1);
            on_path[w] = 0;
            if (hit || exhausted) return hit;
        }
        return false;
    }
};

}  // namespace

SearchStatus c6_minus_search(const LabeledGraph& f, std::uint64_t max_expansions) {
    PathSearch search{f, std::vector<char>(f.graph.vertex_count(), 0), 0, max_expansions, false};
    for (std::uint32_t s = 0; s < f.graph.vertex_count(); ++s) {
        search.on_path[s] = 1;
        const bool hit = search.extend(s, s, 5);
        search.on_path[s] = 0;
        if (hit) return SearchStatus::Found;
        if (search.exhausted) return SearchStatus::Inconclusive;
    }
    return SearchStatus::NotFound;
}

bool verify_c6_minus_free(const LabeledGraph& f) { return c6_minus_search(f) == SearchStatus::NotFound; }

GmTrial gm_trial(unsigned n, unsigned r, std::uint64_t trial, std::uint64_t seed, std::uint32_t v0) {
    const GmSample sample = gm_sample(GmParams{n, r, seed, v0});
    GmTrial t;
    t.trial = trial;
    t.seed = seed;
    t.edges = sample.layer_subgraph.graph.edge_count();
    t.layer_edges = r * binomial(n, r);
    t.density = static_cast<double>(t.edges) / static_cast<double>(t.layer_edges);
    t.c6_free = verify_c6_free(sample.layer_subgraph.graph);
    t.c6_minus_free = verify_c6_minus_free(sample.layer_subgraph);
    t.br_size = sample.br.size();
    t.brm1_size = sample.brm1.size();
    return t;
}

GmDensityStats gm_density_stats(unsigned n, unsigned r, std::size_t trials, std::uint64_t seed) {
    GmDensityStats stats;
    double sum = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        stats.per_trial.push_back(gm_trial(n, r, i, split_seed(seed, i)));
        sum += stats.per_trial.back().density;
    }
    if (trials == 0) return stats;
    stats.mean_density = sum / static_cast<double>(trials);
    double ss = 0;
    for (const auto& t : stats.per_trial) ss += (t.density - stats.mean_density) * (t.density - stats.mean_density);
    stats.stdev = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
    return stats;
}

std::string gm_csv_header() { return "n,r,trial,seed,edges,layer_edges,density,c6_free,c6_minus_free"; }

std::string gm_csv_row(unsigned n, unsigned r, const GmTrial& t) {
    return std::to_string(n) + ',' + std::to_string(r) + ',' + std::to_string(t.trial) + ',' +
           std::to_string(t.seed) + ',' + std::to_string(t.edges) + ',' + std::to_string(t.layer_edges) + ',' +
           fixed(t.density, 9) + ',' + (t.c6_free ? "1" : "0") + ',' + (t.c6_minus_free ? "1" : "0");
}

ExactHypercube exact_ex_qn_c8(unsigned n) {
    if (n != 3 && n != 4) throw std::invalid_argument("exact ex(Q_n, C8) is supported for n in {3, 4}");
    const LabeledGraph cube = build_hypercube(n);
    ExactHypercube out;
    out.n = n;
    out.edges = cube.graph.edge_count();
    const ExactExtremal hs = exact_max_c8free(cube.graph, ExactMethod::HittingSet);
    out.hitting_set = hs.value;
    out.c8_count = hs.cycles;
    out.ex_c8 = hs.value;
    out.witness = hs.certificate;
    if (n == 3) {
        const ExactExtremal ex = exact_max_c8free(cube.graph, ExactMethod::Exhaustive);
        out.exhaustive = ex.value;
        if (ex.value != hs.value) throw std::logic_error("exhaustive and hitting-set values disagree");
    }
    return out;
}

C10Probe union_layers_c10_probe(unsigned n, std::uint64_t seed, std::uint64_t max_expansions) {
    if (n == 0 || n > 8) throw std::invalid_argument("C10 probe supports 1 <= n <= 8");
    const LabeledGraph cube = build_hypercube(n);
    std::vector<std::uint32_t> slot(std::size_t{1} << n);
    for (std::uint32_t i = 0; i < cube.left_sets.size(); ++i) slot[cube.left_sets[i]] = i;
    for (std::uint32_t i = 0; i < cube.right_sets.size(); ++i) slot[cube.right_sets[i]] = i;

    C10Probe probe;
    probe.n = n;
    probe.seed = seed;
    probe.cube_edges = cube.graph.edge_count();
    std::vector<Edge> edges;
    for (unsigned r = 1; r <= n; r += 2) {
        const GmSample s = gm_sample(GmParams{n, r, split_seed(seed, r), 1});
        LayerProbe lp;
        lp.r = r;
        lp.edges = s.layer_subgraph.graph.edge_count();
        lp.layer_edges = r * binomial(n, r);
        lp.density = static_cast<double>(lp.edges) / static_cast<double>(lp.layer_edges);
        probe.layers.push_back(lp);
        for (const Edge& e : s.layer_subgraph.graph.edges()) {
            std::uint32_t a = s.brm1[e.left];
            std::uint32_t b = s.br[e.right];
            if (std::popcount(a) % 2 != 0) std::swap(a, b);
            edges.push_back(Edge{slot[a], slot[b]});
        }
    }
    const BipartiteGraph g(cube.graph.left_count(), cube.graph.right_count(), std::move(edges));
    probe.union_edges = g.edge_count();
    probe.global_density = static_cast<double>(probe.union_edges) / static_cast<double>(probe.cube_edges);
    auto res = find_cycle_of_length(g, 10, SearchOptions{max_expansions, 1});
    probe.c10 = res.status;
    probe.witness = std::move(res.witness);
    return probe;
}

}  // namespace evencycle
