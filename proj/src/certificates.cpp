#include "evencycle/certificates.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace evencycle {

namespace {

void check_mask(const WengerGeometry& geom, const EdgeMask& h) {
    if (h.size() != geom.edge_count()) throw std::invalid_argument("edge mask does not match W_k(q)");
}

template <class Fn>
void for_each_plane(const WengerGeometry& geom, Fn&& fn) {
    const std::uint32_t q = geom.q();
    for (std::uint32_t i = 0; i < q; ++i) {
        for (std::uint32_t j = i + 1; j < q; ++j) {
            for (std::uint32_t r = 0; r < geom.planes_per_pair(); ++r) {
                if (!fn(geom.plane(FieldElem{i}, FieldElem{j}, r))) return;
            }
        }
    }
}

// Edge index of incidence (point, line) in W_k(q), if they are incident.
std::optional<std::size_t> incidence_index(const WengerGeometry& geom, std::uint32_t point, std::uint32_t line) {
    const FieldElem a{line / geom.class_size()};
    if (geom.line_through(point, a) != line) return std::nullopt;
    return geom.incidence_edge(point, a);
}

bool witness_in_mask(const WengerGeometry& geom, const EdgeMask& h, const CycleWitness& w) {
    if (!is_valid_cycle(geom.graph(), w, w.length())) return false;
    for (std::size_t k = 0; k < w.length(); ++k) {
        Vertex a = w.vertices[k];
        Vertex b = w.vertices[(k + 1) % w.length()];
        if (a.side == Side::Right) std::swap(a, b);
        auto idx = incidence_index(geom, a.index, b.index);
        if (!idx || !h[*idx]) return false;
    }
    return true;
}

}  // namespace

std::uint64_t cherry_count_degrees(const WengerGeometry& geom, const EdgeMask& h) {
    check_mask(geom, h);
    std::uint64_t psi = 0;
    const std::uint32_t q = geom.q();
    for (std::uint32_t x = 0; x < geom.point_count(); ++x) {
        std::uint64_t deg = 0;
        for (std::uint32_t a = 0; a < q; ++a) deg += h[static_cast<std::size_t>(x) * q + a];
        if (deg >= 2) psi += deg * (deg - 1) / 2;
    }
    return psi;
}

std::uint64_t cherry_count_planes(const WengerGeometry& geom, const EdgeMask& h) {
    check_mask(geom, h);
    std::uint64_t psi = 0;
    for_each_plane(geom, [&](const PlaneId& plane) {
        psi += geom.auxiliary_graph(h, plane).edge_count();
        return true;
    });
    return psi;
}

CertificateReport certify(const WengerGeometry& geom, const EdgeMask& h) {
    check_mask(geom, h);
    CertificateReport r;
    r.q = geom.q();
    r.m = h.count();
    r.psi_degrees = cherry_count_degrees(geom, h);
    r.psi_planes = cherry_count_planes(geom, h);
    r.lower_bound = convexity_lower_bound(BigInt(r.m), r.q);
    r.kst_cap_total = kst_cap_total(r.q);
    for_each_plane(geom, [&](const PlaneId& plane) {
        r.max_aux_edges = std::max<std::uint64_t>(r.max_aux_edges, geom.auxiliary_edge_count(h, plane));
        return true;
    });
    r.psi_identity = r.psi_degrees == r.psi_planes;
    r.lower_bound_holds = r.lower_bound <= Rational(r.psi_degrees);
    r.aux_within_kst_cap = KstCap(r.q).ge(Rational(r.max_aux_edges));
    r.within_upper_bound = BigInt(r.m) <= c8free_upper_bound(r.q);
    return r;
}

std::string certificate_csv_header() {
    return "q,m,psi,lower_bound_num,lower_bound_den,kst_cap_total,max_aux_edges,verdict";
}

std::string certificate_csv_row(const CertificateReport& r) {
    return std::to_string(r.q) + ',' + std::to_string(r.m) + ',' + std::to_string(r.psi_degrees) + ',' +
           boost::multiprecision::numerator(r.lower_bound).str() + ',' +
           boost::multiprecision::denominator(r.lower_bound).str() + ',' + r.kst_cap_total.ceil().str() + ',' +
           std::to_string(r.max_aux_edges) + ',' + (r.passed() ? "pass" : "fail");
}

CycleWitness lift_c4_to_c8(const WengerGeometry& geom, const EdgeMask& h, const PlaneId& plane,
                           const CycleWitness& c4) {
    check_mask(geom, h);
    const BipartiteGraph aux = geom.auxiliary_graph(h, plane);
    if (const std::string err = cycle_witness_error(aux, c4, 4); !err.empty()) {
        throw std::invalid_argument("lift_c4_to_c8: not a C4 of the auxiliary graph: " + err);
    }
    // rotate so the cycle reads t1, s1, t2, s2
    std::vector<Vertex> v = c4.vertices;
    if (v[0].side == Side::Right) std::rotate(v.begin(), v.begin() + 1, v.end());
    const FieldElem t1{v[0].index}, s1{v[1].index}, t2{v[2].index}, s2{v[3].index};
    const FieldElem zero = geom.field().zero();

    auto meet = [&](FieldElem t, FieldElem s) { return Vertex{Side::Left, geom.plane_point(plane, s, t)}; };
    auto line_i = [&](FieldElem t) {
        return Vertex{Side::Right, geom.line_through(geom.plane_point(plane, zero, t), plane.i)};
    };
    auto line_j = [&](FieldElem s) {
        return Vertex{Side::Right, geom.line_through(geom.plane_point(plane, s, zero), plane.j)};
    };

    CycleWitness c8{{meet(t1, s1), line_j(s1), meet(t2, s1), line_i(t2), meet(t2, s2), line_j(s2), meet(t1, s2),
                     line_i(t1)}};
    if (!witness_in_mask(geom, h, c8)) throw std::logic_error("lifted cycle failed validation");
    return c8;
}

const char* to_string(ExtractionStatus s) {
    switch (s) {
        case ExtractionStatus::Found: return "found";
        case ExtractionStatus::FoundGeneric: return "found_generic";
        case ExtractionStatus::NotFoundAuxiliary: return "not_found_auxiliary";
        case ExtractionStatus::NotFound: return "not_found";
        case ExtractionStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

C8Extraction extract_c8(const WengerGeometry& geom, const EdgeMask& h, ExtractionMode mode,
                        const SearchOptions& generic) {
    check_mask(geom, h);
    C8Extraction out;
    for_each_plane(geom, [&](const PlaneId& plane) {
        if (geom.auxiliary_edge_count(h, plane) < 4) return true;
        const BipartiteGraph aux = geom.auxiliary_graph(h, plane);
        auto c4 = find_c4_small(aux);
        if (!c4) return true;
        out.status = ExtractionStatus::Found;
        out.witness = lift_c4_to_c8(geom, h, plane, *c4);
        out.provenance = Provenance{plane.i, plane.j, geom.plane_index(plane), *c4};
        return false;
    });
    if (out.witness) return out;
    if (mode == ExtractionMode::AuxiliaryOnly) {
        out.status = ExtractionStatus::NotFoundAuxiliary;
        return out;
    }
    auto res = find_cycle_of_length(geom.graph().subgraph(h), 8, generic);
    switch (res.status) {
        case SearchStatus::Found:
            out.status = ExtractionStatus::FoundGeneric;
            out.witness = std::move(res.witness);
            break;
        case SearchStatus::NotFound: out.status = ExtractionStatus::NotFound; break;
        case SearchStatus::Inconclusive: out.status = ExtractionStatus::Inconclusive; break;
    }
    return out;
}

C8FreeVerification verify_c8_free(const WengerGeometry& geom, const EdgeMask& h, const SearchOptions& generic) {
    check_mask(geom, h);
    C8FreeVerification v;
    v.c4_free_in_all_auxiliaries = true;
    for_each_plane(geom, [&](const PlaneId& plane) {
        const BipartiteGraph aux = geom.auxiliary_graph(h, plane);
        v.max_aux_edges = std::max<std::uint64_t>(v.max_aux_edges, aux.edge_count());
        if (v.c4_free_in_all_auxiliaries) {
            if (auto c4 = find_c4_small(aux)) {
                v.c4_free_in_all_auxiliaries = false;
                v.lifted_c8 = lift_c4_to_c8(geom, h, plane, *c4);
            }
        }
        return true;
    });
    auto res = find_cycle_of_length(geom.graph().subgraph(h), 8, generic);
    v.generic_status = res.status;
    v.generic_c8 = std::move(res.witness);
    return v;
}

GreedyResult greedy_c8free_subgraph(const WengerGeometry& geom, std::uint64_t seed, GreedyOrder order,
                                    std::uint64_t per_edge_budget) {
    const std::uint32_t q = geom.q();
    const std::uint32_t n_points = geom.point_count();
    const std::size_t m = geom.edge_count();

    std::vector<std::size_t> sequence;
    sequence.reserve(m);
    if (order == GreedyOrder::Random) {
        sequence.resize(m);
        std::iota(sequence.begin(), sequence.end(), std::size_t{0});
        for (std::size_t i = m; i-- > 1;) std::swap(sequence[i], sequence[uniform_below(i + 1, seed, 1, i)]);
    } else {
        std::vector<std::vector<std::uint32_t>> perms(q, std::vector<std::uint32_t>(n_points));
        for (std::uint32_t a = 0; a < q; ++a) {
            auto& p = perms[a];
            std::iota(p.begin(), p.end(), 0u);
            for (std::uint32_t i = n_points; i-- > 1;) std::swap(p[i], p[uniform_below(i + 1, seed, 2 + a, i)]);
        }
        for (std::uint32_t pos = 0; pos < n_points; ++pos) {
            for (std::uint32_t a = 0; a < q; ++a) sequence.push_back(geom.incidence_edge(perms[a][pos], FieldElem{a}));
        }
    }

    GreedyResult out;
    out.h = geom.empty_mask();
    std::vector<std::vector<std::uint32_t>> adj(static_cast<std::size_t>(n_points) + geom.line_count());
    for (std::size_t e : sequence) {
        const std::uint32_t x = static_cast<std::uint32_t>(e / q);
        const std::uint32_t line = geom.line_through(x, FieldElem{static_cast<std::uint32_t>(e % q)});
        const std::uint32_t u = n_points + line;
        const SearchStatus s = find_path_of_length(adj, x, u, 7, per_edge_budget);
        if (s == SearchStatus::NotFound) {
            out.h.set(e);
            adj[x].push_back(u);
            adj[u].push_back(x);
        } else if (s == SearchStatus::Inconclusive) {
            ++out.rejected_by_budget;
        }
    }
    out.report = certify(geom, out.h);
    out.verified_c8_free = verify_c8_free(geom, out.h).c8_free();
    out.report.generic_c8_free = out.verified_c8_free;
    return out;
}

namespace {

std::vector<std::uint64_t> enumerate_c8_masks(const BipartiteGraph& g) {
    std::vector<std::uint64_t> cycles;
    for_each_cycle(g, 8, [&](std::span<const std::uint32_t> c) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Vertex a = g.vertex(c[k]);
            Vertex b = g.vertex(c[(k + 1) % c.size()]);
            if (a.side == Side::Right) std::swap(a, b);
            mask |= std::uint64_t{1} << *g.edge_index(a.index, b.index);
        }
        cycles.push_back(mask);
        return true;
    });
    return cycles;
}

class HittingSetSearch {
  public:
    explicit HittingSetSearch(std::vector<std::uint64_t> cycles, std::size_t edges)
        : cycles_(std::move(cycles)), best_(edges + 1) {}

    std::uint64_t solve() {
        best_set_ = greedy_upper_bound();
        best_ = std::popcount(best_set_);
        std::vector<std::uint32_t> all(cycles_.size());
        std::iota(all.begin(), all.end(), 0u);
        recurse(all, 0, 0);
        return best_set_;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    std::uint64_t greedy_upper_bound() const {
        std::uint64_t chosen = 0;
        std::vector<std::uint64_t> open = cycles_;
        while (!open.empty()) {
            int counts[64] = {};
            for (std::uint64_t c : open) {
                for (std::uint64_t r = c; r; r &= r - 1) ++counts[std::countr_zero(r)];
            }
            const int e = static_cast<int>(std::max_element(counts, counts + 64) - counts);
            chosen |= std::uint64_t{1} << e;
            std::erase_if(open, [&](std::uint64_t c) { return (c & chosen) != 0; });
        }
        return chosen;
    }

    void recurse(const std::vector<std::uint32_t>& open, std::uint64_t deleted, std::uint64_t forbidden) {
        ++nodes_;
        const int count = std::popcount(deleted);
        if (open.empty()) {
            if (count < best_) {
                best_ = count;
                best_set_ = deleted;
            }
            return;
        }
        // lower bound: cycles pairwise disjoint on their free edges
        std::uint64_t used = 0;
        int packing = 0;
        std::uint32_t branch = open.front();
        int branch_free = 65;
        for (std::uint32_t c : open) {
            const std::uint64_t free_edges = cycles_[c] & ~forbidden;
            const int f = std::popcount(free_edges);
            if (f == 0) return;
            if (f < branch_free) {
                branch_free = f;
                branch = c;
            }
            if ((free_edges & used) == 0) {
                used |= free_edges;
                ++packing;
            }
        }
        if (count + packing >= best_) return;

        std::uint64_t earlier = 0;
        for (std::uint64_t r = cycles_[branch] & ~forbidden; r; r &= r - 1) {
            const std::uint64_t e = r & (~r + 1);
            std::vector<std::uint32_t> rest;
            rest.reserve(open.size());
            for (std::uint32_t c : open) {
                if ((cycles_[c] & e) == 0) rest.push_back(c);
            }
            recurse(rest, deleted | e, forbidden | earlier);
            earlier |= e;
        }
    }

    std::vector<std::uint64_t> cycles_;
    int best_;
    std::uint64_t best_set_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ExactExtremal exact_max_c8free(const BipartiteGraph& g, ExactMethod method) {
    const std::size_t m = g.edge_count();
    ExactExtremal out;
    out.certificate = EdgeMask(m);
    if (method == ExactMethod::Exhaustive) {
        if (m > kExhaustiveEdgeLimit) throw std::invalid_argument("exhaustive method limited to 24 edges");
        std::uint64_t best_mask = 0;
        bool have = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
            if (have && size <= out.value) continue;
            EdgeMask em(m, 0);
            for (std::size_t e = 0; e < m; ++e) em[e] = (mask >> e) & 1u;
            ++out.nodes;
            if (find_cycle_of_length(g.subgraph(em), 8).status == SearchStatus::NotFound) {
                out.value = size;
                best_mask = mask;
                have = true;
            }
        }
        for (std::size_t e = 0; e < m; ++e) out.certificate[e] = (best_mask >> e) & 1u;
        return out;
    }
    if (m > kHittingSetEdgeLimit) throw std::invalid_argument("hitting-set method limited to 64 edges");
    const std::vector<std::uint64_t> cycles = enumerate_c8_masks(g);
    out.cycles = cycles.size();
    HittingSetSearch search(cycles, m);
    const std::uint64_t removed = search.solve();
    out.nodes = search.nodes();
    out.value = m - static_cast<std::size_t>(std::popcount(removed));
    for (std::size_t e = 0; e < m; ++e) out.certificate[e] = !((removed >> e) & 1u);
    if (find_cycle_of_length(g.subgraph(out.certificate), 8).status != SearchStatus::NotFound) {
        throw std::logic_error("hitting-set certificate still contains a C8");
    }
    return out;
}

}  // namespace evencycle
