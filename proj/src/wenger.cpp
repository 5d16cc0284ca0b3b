#include "evencycle/wenger.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <stdexcept>

namespace evencycle {

namespace {

constexpr unsigned kMaxDim = 8;
using Coords = std::array<std::uint32_t, kMaxDim>;

}  // namespace

WengerGeometry::WengerGeometry(FieldSpec field, unsigned k) : field_(std::move(field)), k_(k), q_(field_.q()) {
    if (k_ < 2 || k_ > kMaxDim) throw std::invalid_argument("dimension k must lie in [2, 8]");
    std::uint64_t points = 1;
    for (unsigned i = 0; i < k_; ++i) points *= q_;
    if (points * q_ > kMaxEdges) {
        throw std::invalid_argument("W_" + std::to_string(k_) + "(" + std::to_string(q_) +
                                    ") exceeds the edge budget");
    }
    point_count_ = static_cast<std::uint32_t>(points);
    class_size_ = point_count_ / q_;
    for (std::uint32_t a = 0; a < q_; ++a) directions_.push_back(moment_row(field_, FieldElem{a}, k_));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(point_count_) * q_);
    for (std::uint32_t x = 0; x < point_count_; ++x) {
        for (std::uint32_t a = 0; a < q_; ++a) edges.push_back(Edge{x, line_through(x, FieldElem{a})});
    }
    graph_ = BipartiteGraph(point_count_, point_count_, std::move(edges));
}

std::uint32_t WengerGeometry::planes_per_pair() const { return class_size_ / q_; }

EdgeMask WengerGeometry::full_mask() const {
    EdgeMask m(edge_count());
    m.set();
    return m;
}

std::vector<FieldElem> WengerGeometry::coords_of(std::uint64_t index, unsigned len) const {
    std::vector<FieldElem> c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = FieldElem{static_cast<std::uint32_t>(index % q_)};
        index /= q_;
    }
    return c;
}

std::uint64_t WengerGeometry::index_of(const std::vector<FieldElem>& coords) const {
    std::uint64_t idx = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i].index >= q_) throw std::out_of_range("coordinate outside the field");
        idx = idx * q_ + coords[i].index;
    }
    return idx;
}

std::vector<FieldElem> WengerGeometry::axpy(FieldElem s, const std::vector<FieldElem>& d,
                                            std::vector<FieldElem> x) const {
    for (std::size_t c = 0; c < x.size(); ++c) x[c] = field_.add(x[c], field_.mul(s, d[c]));
    return x;
}

Point WengerGeometry::point(std::uint32_t index) const {
    if (index >= point_count_) throw std::out_of_range("point index out of range");
    return Point{coords_of(index, k_), index};
}

Point WengerGeometry::point(std::vector<FieldElem> coords) const {
    if (coords.size() != k_) throw std::invalid_argument("point must have k coordinates");
    const std::uint64_t idx = index_of(coords);
    return Point{std::move(coords), idx};
}

std::uint32_t WengerGeometry::line_index(const LineId& line) const {
    if (line.a.index >= q_ || line.base.size() + 1 != k_) throw std::invalid_argument("malformed line id");
    return static_cast<std::uint32_t>(line.a.index * static_cast<std::uint64_t>(class_size_) + index_of(line.base));
}

LineId WengerGeometry::line(std::uint32_t index) const {
    if (index >= line_count()) throw std::out_of_range("line index out of range");
    return LineId{FieldElem{index / class_size_}, coords_of(index % class_size_, k_ - 1)};
}

std::uint32_t WengerGeometry::plane_index(const PlaneId& plane) const {
    if (plane.rep.size() + 2 != k_) throw std::invalid_argument("malformed plane id");
    return static_cast<std::uint32_t>(index_of(plane.rep));
}

PlaneId WengerGeometry::plane(FieldElem i, FieldElem j, std::uint32_t rep_index) const {
    if (!(i < j) || j.index >= q_) throw std::invalid_argument("plane classes must satisfy i < j < q");
    if (rep_index >= planes_per_pair()) throw std::out_of_range("plane index out of range");
    return PlaneId{i, j, coords_of(rep_index, k_ - 2)};
}

LineId WengerGeometry::line_through(const Point& x, FieldElem a) const {
    return line(line_through(static_cast<std::uint32_t>(x.index), a));
}

std::uint32_t WengerGeometry::line_through(std::uint32_t point, FieldElem a) const {
    Coords x{};
    std::uint32_t rest = point;
    for (unsigned c = 0; c < k_; ++c) {
        x[c] = rest % q_;
        rest /= q_;
    }
    const auto& d = directions_[a.index];
    const FieldElem x0{x[0]};
    // base = (x - x0 * d_a) without coordinate 0
    std::uint64_t idx = 0;
    for (unsigned c = k_; c-- > 1;) {
        const FieldElem v = field_.sub(FieldElem{x[c]}, field_.mul(x0, d[c]));
        idx = idx * q_ + v.index;
    }
    return static_cast<std::uint32_t>(a.index * static_cast<std::uint64_t>(class_size_) + idx);
}

std::vector<std::uint32_t> WengerGeometry::points_on_line(const LineId& line) const {
    std::vector<FieldElem> base(k_);
    base[0] = field_.zero();
    std::copy(line.base.begin(), line.base.end(), base.begin() + 1);
    std::vector<std::uint32_t> pts;
    pts.reserve(q_);
    for (std::uint32_t t = 0; t < q_; ++t) {
        pts.push_back(static_cast<std::uint32_t>(index_of(axpy(FieldElem{t}, direction(line.a), base))));
    }
    return pts;
}

bool WengerGeometry::contains(const LineId& line, const Point& x) const {
    return line_through(x, line.a) == line;
}

bool WengerGeometry::contains(const PlaneId& plane, const Point& x) const {
    const auto& di = direction(plane.i);
    const auto& dj = direction(plane.j);
    std::vector<FieldElem> base(k_, field_.zero());
    std::copy(plane.rep.begin(), plane.rep.end(), base.begin() + 2);
    auto st = solve2(field_, di[0], dj[0], di[1], dj[1], x.coords[0], x.coords[1]);
    if (!st) return false;
    return axpy(st->second, dj, axpy(st->first, di, base)) == x.coords;
}

std::optional<Point> WengerGeometry::intersection_point(const LineId& li, const LineId& lj) const {
    if (li.a == lj.a) throw std::invalid_argument("intersection_point needs lines from distinct classes");
    const auto& di = direction(li.a);
    const auto& dj = direction(lj.a);
    // (0, bi) + s di = (0, bj) + t dj  <=>  s di - t dj = (0, bj - bi)
    const FieldElem delta1 = field_.sub(lj.base[0], li.base[0]);
    auto st = solve2(field_, di[0], field_.neg(dj[0]), di[1], field_.neg(dj[1]), field_.zero(), delta1);
    if (!st) return std::nullopt;  // unreachable for distinct moment-curve directions
    const auto [s, t] = *st;
    for (unsigned c = 2; c < k_; ++c) {
        const FieldElem lhs = field_.sub(field_.mul(s, di[c]), field_.mul(t, dj[c]));
        if (lhs != field_.sub(lj.base[c - 1], li.base[c - 1])) return std::nullopt;
    }
    std::vector<FieldElem> base(k_);
    base[0] = field_.zero();
    std::copy(li.base.begin(), li.base.end(), base.begin() + 1);
    return point(axpy(s, di, std::move(base)));
}

PlaneId WengerGeometry::plane_of(const LineId& li, const LineId& lj) const {
    const LineId& lo = li.a < lj.a ? li : lj;
    const LineId& hi = li.a < lj.a ? lj : li;
    auto x = intersection_point(lo, hi);
    if (!x) throw std::domain_error("plane_of: lines are skew");
    const auto& di = direction(lo.a);
    const auto& dj = direction(hi.a);
    auto st = solve2(field_, di[0], dj[0], di[1], dj[1], field_.neg(x->coords[0]), field_.neg(x->coords[1]));
    const auto moved = axpy(st->second, dj, axpy(st->first, di, x->coords));
    return PlaneId{lo.a, hi.a, std::vector<FieldElem>(moved.begin() + 2, moved.end())};
}

std::uint32_t WengerGeometry::plane_point(const PlaneId& plane, FieldElem s, FieldElem t) const {
    const auto& di = direction(plane.i);
    const auto& dj = direction(plane.j);
    std::uint64_t idx = 0;
    for (unsigned c = k_; c-- > 0;) {
        FieldElem v = c >= 2 ? plane.rep[c - 2] : field_.zero();
        v = field_.add(v, field_.add(field_.mul(s, di[c]), field_.mul(t, dj[c])));
        idx = idx * q_ + v.index;
    }
    return static_cast<std::uint32_t>(idx);
}

std::vector<LineId> WengerGeometry::lines_in_plane(const PlaneId& plane, FieldElem c) const {
    if (c != plane.i && c != plane.j) throw std::invalid_argument("class is not one of the plane's classes");
    std::vector<LineId> lines;
    lines.reserve(q_);
    for (std::uint32_t u = 0; u < q_; ++u) {
        const std::uint32_t anchor =
            c == plane.i ? plane_point(plane, field_.zero(), FieldElem{u}) : plane_point(plane, FieldElem{u}, field_.zero());
        lines.push_back(line(line_through(anchor, c)));
    }
    return lines;
}

KqqReport WengerGeometry::verify_kqq_decomposition(FieldElem i, FieldElem j) const {
    if (i == j) throw std::invalid_argument("verify_kqq_decomposition needs distinct classes");
    if (j < i) std::swap(i, j);
    KqqReport report;
    report.expected_components = planes_per_pair();

    std::vector<LineId> li, lj;
    for (std::uint32_t b = 0; b < class_size_; ++b) {
        li.push_back(line(i.index * class_size_ + b));
        lj.push_back(line(j.index * class_size_ + b));
    }
    std::vector<Edge> meets;
    for (std::uint32_t a = 0; a < class_size_; ++a) {
        for (std::uint32_t b = 0; b < class_size_; ++b) {
            if (intersection_point(li[a], lj[b])) meets.push_back(Edge{a, b});
        }
    }
    report.intersecting_pairs = meets.size();
    const BipartiteGraph ig(class_size_, class_size_, std::move(meets));

    std::vector<std::uint32_t> comp(ig.vertex_count(), UINT32_MAX);
    bool all_kqq = true;
    bool match = true;
    std::set<std::uint32_t> planes_seen;
    for (std::uint32_t root = 0; root < ig.vertex_count(); ++root) {
        if (comp[root] != UINT32_MAX) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(report.component_count++);
        std::vector<std::uint32_t> members{root};
        comp[root] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (std::uint32_t w : ig.neighbors(members[head])) {
                if (comp[w] == UINT32_MAX) {
                    comp[w] = id;
                    members.push_back(w);
                }
            }
        }
        std::vector<std::uint32_t> left_side, right_side;
        std::size_t degree_sum = 0;
        for (std::uint32_t v : members) {
            degree_sum += ig.neighbors(v).size();
            if (v < class_size_) {
                left_side.push_back(v);
            } else {
                right_side.push_back(v - class_size_);
            }
        }
        if (left_side.size() != q_ || right_side.size() != q_ || degree_sum != 2u * q_ * q_) {
            all_kqq = false;
            match = false;
            continue;
        }
        std::sort(left_side.begin(), left_side.end());
        std::sort(right_side.begin(), right_side.end());
        const PlaneId pl = plane_of(li[left_side.front()], lj[ig.left_neighbors(left_side.front()).front()]);
        std::vector<std::uint32_t> in_i, in_j;
        for (const auto& l : lines_in_plane(pl, i)) in_i.push_back(line_index(l) - i.index * class_size_);
        for (const auto& l : lines_in_plane(pl, j)) in_j.push_back(line_index(l) - j.index * class_size_);
        std::sort(in_i.begin(), in_i.end());
        std::sort(in_j.begin(), in_j.end());
        if (in_i != left_side || in_j != right_side || !planes_seen.insert(plane_index(pl)).second) match = false;
    }
    report.all_components_are_kqq = all_kqq;
    report.components_match_planes = match;
    return report;
}

std::size_t WengerGeometry::auxiliary_edge_count(const EdgeMask& h, const PlaneId& plane) const {
    std::size_t count = 0;
    for (std::uint32_t t = 0; t < q_; ++t) {
        for (std::uint32_t s = 0; s < q_; ++s) {
            const std::uint32_t x = plane_point(plane, FieldElem{s}, FieldElem{t});
            if (h[incidence_edge(x, plane.i)] && h[incidence_edge(x, plane.j)]) ++count;
        }
    }
    return count;
}

BipartiteGraph WengerGeometry::auxiliary_graph(const EdgeMask& h, const PlaneId& plane) const {
    if (h.size() != edge_count()) throw std::invalid_argument("edge mask size does not match W_k(q)");
    std::vector<Edge> edges;
    for (std::uint32_t t = 0; t < q_; ++t) {
        for (std::uint32_t s = 0; s < q_; ++s) {
            const std::uint32_t x = plane_point(plane, FieldElem{s}, FieldElem{t});
            if (h[incidence_edge(x, plane.i)] && h[incidence_edge(x, plane.j)]) edges.push_back(Edge{t, s});
        }
    }
    return BipartiteGraph(q_, q_, std::move(edges));
}

std::vector<std::string> WengerGeometry::file_headers() const {
    return {"# wenger k=" + std::to_string(k_) + " q=" + std::to_string(q_) + " p=" + std::to_string(field_.p()) +
            " e=" + std::to_string(field_.e()) + " modulus=" + field_.modulus_string()};
}

std::string WengerGeometry::point_name(std::uint32_t point) const { return "P:" + std::to_string(point); }

std::string WengerGeometry::line_name(std::uint32_t line) const {
    return "L:" + std::to_string(line / class_size_) + ":" + std::to_string(line % class_size_);
}

std::string format_witness(const WengerGeometry& geom, const CycleWitness& w) {
    std::string s = "C" + std::to_string(w.length()) + ":";
    for (const Vertex& v : w.vertices) {
        s += ' ';
        s += v.side == Side::Left ? geom.point_name(v.index) : geom.line_name(v.index);
    }
    return s;
}

}  // namespace evencycle
