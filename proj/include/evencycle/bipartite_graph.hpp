#ifndef EVENCYCLE_BIPARTITE_GRAPH_HPP
#define EVENCYCLE_BIPARTITE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace evencycle {

struct Edge {
    std::uint32_t left = 0;
    std::uint32_t right = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { Left, Right };

struct Vertex {
    Side side = Side::Left;
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Selects edges of a parent graph by edge index.
using EdgeMask = boost::dynamic_bitset<>;

/// Immutable bipartite graph in compressed adjacency form.
///
/// Edges are stored in lexicographic (left, right) order; the position of an
/// edge in that order is its edge index. Vertices also have a unified id
/// (left v -> v, right u -> nLeft + u) used by the cycle searches.
class BipartiteGraph {
  public:
    BipartiteGraph() = default;
    /// Throws std::invalid_argument on out-of-range endpoints or duplicates.
    BipartiteGraph(std::uint32_t n_left, std::uint32_t n_right, std::vector<Edge> edges);

    std::uint32_t left_count() const { return n_left_; }
    std::uint32_t right_count() const { return n_right_; }
    std::uint32_t vertex_count() const { return n_left_ + n_right_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const std::uint32_t> left_neighbors(std::uint32_t v) const;
    std::span<const std::uint32_t> right_neighbors(std::uint32_t u) const;
    /// Neighbors of a unified vertex id, as unified ids, ascending.
    std::span<const std::uint32_t> neighbors(std::uint32_t unified) const;

    std::size_t left_degree(std::uint32_t v) const { return left_neighbors(v).size(); }
    std::size_t right_degree(std::uint32_t u) const { return right_neighbors(u).size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(std::uint32_t left, std::uint32_t right) const;
    /// Index of edge (left, right), or nullopt if absent.
    std::optional<std::size_t> edge_index(std::uint32_t left, std::uint32_t right) const;
    /// First edge index incident to left vertex v; its edges are contiguous.
    std::size_t left_edge_offset(std::uint32_t v) const { return left_offsets_[v]; }

    std::uint32_t unified(Vertex v) const { return v.side == Side::Left ? v.index : n_left_ + v.index; }
    Vertex vertex(std::uint32_t unified) const {
        return unified < n_left_ ? Vertex{Side::Left, unified} : Vertex{Side::Right, unified - n_left_};
    }
    bool adjacent(Vertex a, Vertex b) const;

    /// Same vertex sets, only the edges selected by mask (size edge_count()).
    BipartiteGraph subgraph(const EdgeMask& mask) const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.edges_ == b.edges_;
    }

  private:
    std::uint32_t n_left_ = 0;
    std::uint32_t n_right_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> left_offsets_{0};
    std::vector<std::uint32_t> left_adj_;
    std::vector<std::size_t> right_offsets_{0};
    std::vector<std::uint32_t> right_adj_;
    std::vector<std::size_t> unified_offsets_{0};
    std::vector<std::uint32_t> unified_adj_;
};

/// Closed alternating walk v1, ..., v_{2l}; valid when it is a simple cycle.
struct CycleWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Empty string if the witness is a simple cycle of the given length in g,
/// otherwise a description of the first violated condition.
std::string cycle_witness_error(const BipartiteGraph& g, const CycleWitness& w, std::size_t length);
inline bool is_valid_cycle(const BipartiteGraph& g, const CycleWitness& w, std::size_t length) {
    return cycle_witness_error(g, w, length).empty();
}

/// Text graph file: optional leading header lines (each starting with '#'),
/// then `# bipartite nLeft=<int> nRight=<int> m=<int>`, then one `L<i> R<j>`
/// line per edge in ascending order.
struct GraphFile {
    std::vector<std::string> extra_headers;
    BipartiteGraph graph;
};

void write_graph(std::ostream& out, const BipartiteGraph& g, const std::vector<std::string>& extra_headers = {});
/// Throws std::runtime_error with the offending line number on malformed input.
GraphFile read_graph(std::istream& in);

/// Counter-based uniform draw in [0, 1) keyed by (seed, stream, counter).
std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
double unit_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
/// Uniform integer in [0, bound) by rejection over counter-based draws.
std::uint64_t uniform_below(std::uint64_t bound, std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
/// Fixed splitting rule for per-trial seeds.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

/// Edge e kept iff unit_uniform(seed, 0, e) < keep.
EdgeMask random_edge_mask(std::size_t edge_count, double keep, std::uint64_t seed);
BipartiteGraph random_edge_subgraph(const BipartiteGraph& g, double keep, std::uint64_t seed);

}  // namespace evencycle

#endif
