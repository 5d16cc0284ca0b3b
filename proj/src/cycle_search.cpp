#include "evencycle/cycle_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace evencycle {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not_found";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_length(unsigned length) {
    if (length < 4 || length > 10 || length % 2 != 0) {
        throw std::invalid_argument("cycle length must be one of 4, 6, 8, 10 (got " + std::to_string(length) + ")");
    }
}

bool contains_sorted(std::span<const std::uint32_t> xs, std::uint32_t x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

// Depth-first enumeration of canonical simple cycles through a fixed start.
class CanonicalDfs {
  public:
    CanonicalDfs(const BipartiteGraph& g, unsigned length, std::atomic<std::uint64_t>& expansions,
                 std::uint64_t limit)
        : g_(g), length_(length), on_path_(g.vertex_count(), 0), expansions_(expansions), limit_(limit) {
        path_.reserve(length);
    }

    bool exhausted() const { return exhausted_; }

    // Returns true if the visitor asked to stop or the budget ran out.
    template <class Visit>
    bool run(std::uint32_t start, Visit& visit) {
        path_.clear();
        path_.push_back(start);
        on_path_[start] = 1;
        const bool stop = extend(start, visit);
        on_path_[start] = 0;
        return stop;
    }

  private:
    template <class Visit>
    bool extend(std::uint32_t start, Visit& visit) {
        const std::uint32_t tail = path_.back();
        const bool last_step = path_.size() + 1 == length_;
        for (std::uint32_t w : g_.neighbors(tail)) {
            if (w <= start || on_path_[w]) continue;
            if (last_step) {
                if (w < path_[1] || !contains_sorted(g_.neighbors(w), start)) continue;
            }
            const std::uint64_t used = expansions_.fetch_add(1, std::memory_order_relaxed);
            if (limit_ != 0 && used >= limit_) {
                exhausted_ = true;
                return true;
            }
            path_.push_back(w);
            on_path_[w] = 1;
            bool stop = false;
            if (last_step) {
                stop = !visit(std::span<const std::uint32_t>(path_));
            } else {
                stop = extend(start, visit);
            }
            on_path_[w] = 0;
            path_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const BipartiteGraph& g_;
    unsigned length_;
    std::vector<std::uint32_t> path_;
    std::vector<char> on_path_;
    std::atomic<std::uint64_t>& expansions_;
    std::uint64_t limit_;
    bool exhausted_ = false;
};

CycleWitness to_witness(const BipartiteGraph& g, std::span<const std::uint32_t> ids) {
    CycleWitness w;
    w.vertices.reserve(ids.size());
    for (std::uint32_t id : ids) w.vertices.push_back(g.vertex(id));
    return w;
}

}  // namespace

std::optional<unsigned> girth_bipartite(const BipartiteGraph& g) {
    const std::uint32_t n = g.vertex_count();
    unsigned best = std::numeric_limits<unsigned>::max();
    std::vector<std::uint32_t> dist(n, kNone);
    std::vector<std::uint32_t> parent(n, kNone);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t root = 0; root < n && best > 4; ++root) {
        for (std::uint32_t v : touched) dist[v] = kNone;
        touched.clear();
        std::queue<std::uint32_t> bfs;
        dist[root] = 0;
        parent[root] = kNone;
        touched.push_back(root);
        bfs.push(root);
        while (!bfs.empty()) {
            const std::uint32_t u = bfs.front();
            bfs.pop();
            if (2 * dist[u] + 1 >= best) break;
            for (std::uint32_t w : g.neighbors(u)) {
                if (w == parent[u]) continue;
                if (dist[w] == kNone) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    bfs.push(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<unsigned>::max()) return std::nullopt;
    return best;
}

CycleSearchResult find_cycle_of_length(const BipartiteGraph& g, unsigned length, const SearchOptions& opts) {
    check_length(length);
    const std::uint32_t n = g.vertex_count();
    std::atomic<std::uint64_t> expansions{0};
    std::atomic<std::uint32_t> next_start{0};
    std::atomic<std::uint32_t> best_start{kNone};
    std::mutex mu;
    std::uint32_t aborted_start = kNone;
    std::optional<CycleWitness> best_witness;

    auto worker = [&]() {
        CanonicalDfs dfs(g, length, expansions, opts.max_expansions);
        while (true) {
            const std::uint32_t s = next_start.fetch_add(1);
            if (s >= n || s > best_start.load()) return;
            std::optional<CycleWitness> found;
            auto visit = [&](std::span<const std::uint32_t> cycle) {
                found = to_witness(g, cycle);
                return false;
            };
            dfs.run(s, visit);
            std::lock_guard lock(mu);
            if (found) {
                if (s < best_start.load()) {
                    best_start = s;
                    best_witness = std::move(found);
                }
            } else if (dfs.exhausted()) {
                aborted_start = std::min(aborted_start, s);
                return;
            }
        }
    };

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CycleSearchResult result;
    result.expansions = expansions.load();
    if (opts.max_expansions != 0) result.expansions = std::min(result.expansions, opts.max_expansions);
    if (best_witness && best_start.load() < aborted_start) {
        result.status = SearchStatus::Found;
        result.witness = std::move(best_witness);
    } else if (aborted_start != kNone) {
        result.status = SearchStatus::Inconclusive;
    } else {
        result.status = SearchStatus::NotFound;
    }
    return result;
}

bool for_each_cycle(const BipartiteGraph& g, unsigned length,
                    const std::function<bool(std::span<const std::uint32_t>)>& visit, std::uint64_t max_expansions) {
    check_length(length);
    std::atomic<std::uint64_t> expansions{0};
    CanonicalDfs dfs(g, length, expansions, max_expansions);
    auto forward = [&](std::span<const std::uint32_t> c) { return visit(c); };
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        if (dfs.run(s, forward)) return false;
    }
    return true;
}

std::optional<CycleWitness> find_c4_small(const BipartiteGraph& g) {
    const std::uint64_t nr = g.right_count();
    const bool dense = nr * nr <= (1u << 22);
    std::vector<std::uint32_t> first_dense(dense ? nr * nr : 0, kNone);
    std::unordered_map<std::uint64_t, std::uint32_t> first_sparse;
    for (std::uint32_t v = 0; v < g.left_count(); ++v) {
        auto nb = g.left_neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const std::uint64_t key = nb[a] * nr + nb[b];
                std::uint32_t prev = kNone;
                if (dense) {
                    prev = first_dense[key];
                    if (prev == kNone) first_dense[key] = v;
                } else {
                    auto [it, inserted] = first_sparse.emplace(key, v);
                    if (!inserted) prev = it->second;
                }
                if (prev != kNone) {
                    return CycleWitness{{Vertex{Side::Left, prev}, Vertex{Side::Right, nb[a]}, Vertex{Side::Left, v},
                                         Vertex{Side::Right, nb[b]}}};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

bool path_dfs(const std::vector<std::vector<std::uint32_t>>& adj, std::vector<char>& on_path, std::uint32_t tail,
              std::uint32_t to, unsigned remaining, std::uint64_t& expansions, std::uint64_t limit, bool& exhausted) {
    for (std::uint32_t w : adj[tail]) {
        if (remaining == 1) {
            if (w == to) return true;
            continue;
        }
        if (w == to || on_path[w]) continue;
        if (limit != 0 && ++expansions > limit) {
            exhausted = true;
            return false;
        }
        on_path[w] = 1;
        const bool hit = path_dfs(adj, on_path, w, to, remaining - 1, expansions, limit, exhausted);
        on_path[w] = 0;
        if (hit) return true;
        if (exhausted) return false;
    }
    return false;
}

}  // namespace

SearchStatus find_path_of_length(const std::vector<std::vector<std::uint32_t>>& adjacency, std::uint32_t from,
                                 std::uint32_t to, unsigned length, std::uint64_t max_expansions) {
    if (length == 0) return from == to ? SearchStatus::Found : SearchStatus::NotFound;
    if (from == to) throw std::invalid_argument("path endpoints must differ");
    std::vector<char> on_path(adjacency.size(), 0);
    on_path[from] = 1;
    std::uint64_t expansions = 0;
    bool exhausted = false;
    const bool hit = path_dfs(adjacency, on_path, from, to, length, expansions, max_expansions, exhausted);
    if (hit) return SearchStatus::Found;
    return exhausted ? SearchStatus::Inconclusive : SearchStatus::NotFound;
}

}  // namespace evencycle
