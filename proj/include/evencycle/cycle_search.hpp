#ifndef EVENCYCLE_CYCLE_SEARCH_HPP
#define EVENCYCLE_CYCLE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "evencycle/bipartite_graph.hpp"

namespace evencycle {

enum class SearchStatus { Found, NotFound, Inconclusive };

const char* to_string(SearchStatus s);

struct SearchOptions {
    /// Cap on DFS node expansions; 0 means unlimited.
    std::uint64_t max_expansions = 0;
    /// Worker threads sharding start vertices; results do not depend on it.
    unsigned workers = 1;
};

struct CycleSearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<CycleWitness> witness;
    std::uint64_t expansions = 0;
};

/// Exact girth by BFS from every vertex; nullopt for a forest.
std::optional<unsigned> girth_bipartite(const BipartiteGraph& g);

/// Simple cycle of exactly `length` edges, length in {4, 6, 8, 10}.
///
/// Each cycle is visited once: it starts at its minimum unified vertex id and
/// its second vertex has a smaller id than its last. The witness returned is
/// the first in that canonical order (lowest start vertex, then DFS order over
/// ascending neighbor lists). Throws std::invalid_argument on other lengths.
CycleSearchResult find_cycle_of_length(const BipartiteGraph& g, unsigned length, const SearchOptions& opts = {});

/// Calls visit(cycle) for every simple cycle of the given length, with the
/// cycle as unified vertex ids in canonical form. Stop early by returning
/// false. Returns false if stopped or out of budget.
bool for_each_cycle(const BipartiteGraph& g, unsigned length,
                    const std::function<bool(std::span<const std::uint32_t>)>& visit,
                    std::uint64_t max_expansions = 0);

/// C4 detection by common-neighbourhood pigeonhole, O(sum deg^2). Scans left
/// vertices in order and returns the first pair of right vertices seen twice.
std::optional<CycleWitness> find_c4_small(const BipartiteGraph& g);

/// Simple path with exactly `length` edges from `from` to `to` over a mutable
/// adjacency list (unified ids). Used for incremental cycle checks.
SearchStatus find_path_of_length(const std::vector<std::vector<std::uint32_t>>& adjacency, std::uint32_t from,
                                 std::uint32_t to, unsigned length, std::uint64_t max_expansions = 0);

}  // namespace evencycle

#endif
