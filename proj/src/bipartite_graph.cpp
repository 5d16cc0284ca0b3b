#include "evencycle/bipartite_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace evencycle {

BipartiteGraph::BipartiteGraph(std::uint32_t n_left, std::uint32_t n_right, std::vector<Edge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.left >= n_left_ || e.right >= n_right_) {
            throw std::invalid_argument("edge (" + std::to_string(e.left) + ", " + std::to_string(e.right) +
                                        ") out of range");
        }
        if (i > 0 && edges_[i - 1] == e) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.left) + ", " +
                                        std::to_string(e.right) + ")");
        }
    }

    left_offsets_.assign(n_left_ + 1, 0);
    right_offsets_.assign(n_right_ + 1, 0);
    for (const Edge& e : edges_) {
        ++left_offsets_[e.left + 1];
        ++right_offsets_[e.right + 1];
    }
    for (std::uint32_t v = 0; v < n_left_; ++v) left_offsets_[v + 1] += left_offsets_[v];
    for (std::uint32_t u = 0; u < n_right_; ++u) right_offsets_[u + 1] += right_offsets_[u];

    left_adj_.resize(edges_.size());
    right_adj_.resize(edges_.size());
    std::vector<std::size_t> right_fill(right_offsets_.begin(), right_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        left_adj_[i] = edges_[i].right;
        // edges are sorted by left, so each right list comes out ascending
        right_adj_[right_fill[edges_[i].right]++] = edges_[i].left;
    }

    const std::uint32_t n = vertex_count();
    unified_offsets_.assign(n + 1, 0);
    unified_adj_.reserve(2 * edges_.size());
    for (std::uint32_t v = 0; v < n_left_; ++v) {
        for (std::uint32_t r : left_neighbors(v)) unified_adj_.push_back(n_left_ + r);
        unified_offsets_[v + 1] = unified_adj_.size();
    }
    for (std::uint32_t u = 0; u < n_right_; ++u) {
        for (std::uint32_t l : right_neighbors(u)) unified_adj_.push_back(l);
        unified_offsets_[n_left_ + u + 1] = unified_adj_.size();
    }
}

std::span<const std::uint32_t> BipartiteGraph::left_neighbors(std::uint32_t v) const {
    return {left_adj_.data() + left_offsets_[v], left_offsets_[v + 1] - left_offsets_[v]};
}

std::span<const std::uint32_t> BipartiteGraph::right_neighbors(std::uint32_t u) const {
    return {right_adj_.data() + right_offsets_[u], right_offsets_[u + 1] - right_offsets_[u]};
}

std::span<const std::uint32_t> BipartiteGraph::neighbors(std::uint32_t unified) const {
    return {unified_adj_.data() + unified_offsets_[unified], unified_offsets_[unified + 1] - unified_offsets_[unified]};
}

std::optional<std::size_t> BipartiteGraph::edge_index(std::uint32_t left, std::uint32_t right) const {
    if (left >= n_left_ || right >= n_right_) return std::nullopt;
    auto nb = left_neighbors(left);
    auto it = std::lower_bound(nb.begin(), nb.end(), right);
    if (it == nb.end() || *it != right) return std::nullopt;
    return left_offsets_[left] + static_cast<std::size_t>(it - nb.begin());
}

bool BipartiteGraph::has_edge(std::uint32_t left, std::uint32_t right) const {
    return edge_index(left, right).has_value();
}

bool BipartiteGraph::adjacent(Vertex a, Vertex b) const {
    if (a.side == b.side) return false;
    if (a.side == Side::Right) std::swap(a, b);
    return has_edge(a.index, b.index);
}

BipartiteGraph BipartiteGraph::subgraph(const EdgeMask& mask) const {
    if (mask.size() != edges_.size()) throw std::invalid_argument("edge mask size does not match graph");
    std::vector<Edge> kept;
    kept.reserve(mask.count());
    for (std::size_t i = mask.find_first(); i != EdgeMask::npos; i = mask.find_next(i)) kept.push_back(edges_[i]);
    return BipartiteGraph(n_left_, n_right_, std::move(kept));
}

std::string cycle_witness_error(const BipartiteGraph& g, const CycleWitness& w, std::size_t length) {
    const auto& vs = w.vertices;
    if (vs.size() != length) {
        return "expected " + std::to_string(length) + " vertices, got " + std::to_string(vs.size());
    }
    if (length < 4 || length % 2 != 0) return "cycle length must be even and at least 4";
    for (const Vertex& v : vs) {
        const std::uint32_t limit = v.side == Side::Left ? g.left_count() : g.right_count();
        if (v.index >= limit) return "vertex index out of range";
    }
    std::vector<Vertex> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
    for (std::size_t i = 0; i < length; ++i) {
        const Vertex& a = vs[i];
        const Vertex& b = vs[(i + 1) % length];
        if (a.side == b.side) return "consecutive vertices on the same side at position " + std::to_string(i);
        if (!g.adjacent(a, b)) return "missing edge at position " + std::to_string(i);
    }
    return {};
}

void write_graph(std::ostream& out, const BipartiteGraph& g, const std::vector<std::string>& extra_headers) {
    for (const auto& h : extra_headers) out << h << '\n';
    out << "# bipartite nLeft=" << g.left_count() << " nRight=" << g.right_count() << " m=" << g.edge_count()
        << '\n';
    for (const Edge& e : g.edges()) out << 'L' << e.left << " R" << e.right << '\n';
}

namespace {

std::uint64_t parse_field(const std::string& token, const std::string& key, std::size_t line_no) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + prefix);
    }
    std::size_t used = 0;
    const std::string digits = token.substr(prefix.size());
    std::uint64_t v = 0;
    try {
        v = std::stoull(digits, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != digits.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad integer in " + token);
    }
    return v;
}

std::uint32_t parse_vertex(const std::string& token, char tag, std::size_t line_no) {
    if (token.size() < 2 || token[0] != tag || token[1] < '0' || token[1] > '9') {
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + tag + "<int>");
    }
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(token.substr(1), &used);
    if (used + 1 != token.size() || v > UINT32_MAX) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad vertex " + token);
    }
    return static_cast<std::uint32_t>(v);
}

}  // namespace

GraphFile read_graph(std::istream& in) {
    GraphFile file;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n_left = 0, n_right = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!have_header) {
            if (line.rfind("# bipartite ", 0) == 0) {
                std::istringstream ss(line.substr(12));
                std::string a, b, c, extra;
                ss >> a >> b >> c;
                if (ss >> extra) throw std::runtime_error("line " + std::to_string(line_no) + ": trailing data");
                n_left = parse_field(a, "nLeft", line_no);
                n_right = parse_field(b, "nRight", line_no);
                m = parse_field(c, "m", line_no);
                if (n_left > UINT32_MAX || n_right > UINT32_MAX) {
                    throw std::runtime_error("line " + std::to_string(line_no) + ": vertex count too large");
                }
                have_header = true;
            } else if (!line.empty() && line[0] == '#') {
                file.extra_headers.push_back(line);
            } else {
                throw std::runtime_error("line " + std::to_string(line_no) + ": missing '# bipartite' header");
            }
            continue;
        }
        std::istringstream ss(line);
        std::string l, r, extra;
        if (!(ss >> l >> r) || (ss >> extra)) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'L<i> R<j>'");
        }
        Edge e{parse_vertex(l, 'L', line_no), parse_vertex(r, 'R', line_no)};
        if (e.left >= n_left || e.right >= n_right) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": vertex out of range");
        }
        if (!edges.empty() && !(edges.back() < e)) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": edges not in ascending order");
        }
        edges.push_back(e);
    }
    if (!have_header) throw std::runtime_error("missing '# bipartite' header");
    if (edges.size() != m) {
        throw std::runtime_error("header declares m=" + std::to_string(m) + " but file has " +
                                 std::to_string(edges.size()) + " edges");
    }
    file.graph = BipartiteGraph(static_cast<std::uint32_t>(n_left), static_cast<std::uint32_t>(n_right),
                                std::move(edges));
    return file;
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // splitmix64 finalizer applied to a keyed combination
    auto fmix = [](std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    return fmix(fmix(fmix(seed) ^ stream) ^ counter);
}

double unit_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(mix64(seed, stream, counter) >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::uint64_t bound, std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t x = mix64(seed ^ (attempt * 0xD1B54A32D192ED03ull), stream, counter);
        if (x < limit) return x % bound;
    }
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed, 0x5EED, index); }

EdgeMask random_edge_mask(std::size_t edge_count, double keep, std::uint64_t seed) {
    if (!(keep >= 0.0 && keep <= 1.0)) throw std::invalid_argument("keep probability must lie in [0, 1]");
    EdgeMask mask(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        if (unit_uniform(seed, 0, i) < keep) mask.set(i);
    }
    return mask;
}

BipartiteGraph random_edge_subgraph(const BipartiteGraph& g, double keep, std::uint64_t seed) {
    return g.subgraph(random_edge_mask(g.edge_count(), keep, seed));
}

}  // namespace evencycle
