#ifndef EVENCYCLE_WENGER_HPP
#define EVENCYCLE_WENGER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evencycle/bipartite_graph.hpp"
#include "evencycle/finite_field.hpp"

namespace evencycle {

/// A point of F_q^k; index = sum coords[i] * q^i.
struct Point {
    std::vector<FieldElem> coords;
    std::uint64_t index = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// A line of direction (1, a, ..., a^{k-1}), stored by its unique point with
/// first coordinate zero (base holds coordinates 1..k-1 of that point).
struct LineId {
    FieldElem a;
    std::vector<FieldElem> base;

    friend bool operator==(const LineId&, const LineId&) = default;
};

/// Affine 2-plane spanned by directions of classes i < j, stored by its
/// unique point with coordinates 0 and 1 zero (rep holds coordinates 2..k-1).
struct PlaneId {
    FieldElem i;
    FieldElem j;
    std::vector<FieldElem> rep;

    friend bool operator==(const PlaneId&, const PlaneId&) = default;
};

struct KqqReport {
    std::size_t component_count = 0;
    std::size_t expected_components = 0;
    std::size_t intersecting_pairs = 0;
    bool all_components_are_kqq = false;
    bool components_match_planes = false;

    bool ok() const {
        return component_count == expected_components && all_components_are_kqq && components_match_planes;
    }
};

/// The point-line incidence graph W_k(q) together with its affine geometry.
///
/// Left vertices are points (by Point::index), right vertices are lines with
/// index a * q^{k-1} + sum base[i] * q^i. Each point meets exactly one line
/// per class, so the edge between point x and its class-a line has edge
/// index x * q + a.
class WengerGeometry {
  public:
    static constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 26;

    /// Throws std::invalid_argument for k < 2, k > 8, or an out-of-budget
    /// graph size.
    explicit WengerGeometry(FieldSpec field, unsigned k = 5);

    const FieldSpec& field() const { return field_; }
    unsigned k() const { return k_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t point_count() const { return point_count_; }
    std::uint32_t line_count() const { return point_count_; }
    std::uint32_t class_size() const { return class_size_; }
    std::uint32_t planes_per_pair() const;

    const BipartiteGraph& graph() const { return graph_; }
    std::size_t edge_count() const { return graph_.edge_count(); }
    std::size_t incidence_edge(std::uint32_t point, FieldElem a) const {
        return static_cast<std::size_t>(point) * q_ + a.index;
    }
    EdgeMask full_mask() const;
    EdgeMask empty_mask() const { return EdgeMask(edge_count()); }

    const std::vector<FieldElem>& direction(FieldElem a) const { return directions_[a.index]; }

    Point point(std::uint32_t index) const;
    Point point(std::vector<FieldElem> coords) const;
    std::uint32_t line_index(const LineId& line) const;
    LineId line(std::uint32_t index) const;
    std::uint32_t plane_index(const PlaneId& plane) const;
    PlaneId plane(FieldElem i, FieldElem j, std::uint32_t rep_index) const;

    LineId line_through(const Point& x, FieldElem a) const;
    std::uint32_t line_through(std::uint32_t point, FieldElem a) const;
    std::vector<std::uint32_t> points_on_line(const LineId& line) const;
    bool contains(const LineId& line, const Point& x) const;
    bool contains(const PlaneId& plane, const Point& x) const;

    /// Meet of lines from distinct classes, nullopt if skew. Throws
    /// std::invalid_argument for two lines of the same class.
    std::optional<Point> intersection_point(const LineId& li, const LineId& lj) const;
    /// The plane containing two intersecting lines of distinct classes.
    /// Throws std::domain_error for skew lines, std::invalid_argument for
    /// parallel ones.
    PlaneId plane_of(const LineId& li, const LineId& lj) const;
    /// The q lines of class c (c must be plane.i or plane.j) inside the plane.
    /// Class-i lines are ordered by their offset along d_j from the plane's
    /// base point and class-j lines by their offset along d_i.
    std::vector<LineId> lines_in_plane(const PlaneId& plane, FieldElem c) const;
    /// Point rep' + s * d_i + t * d_j of the plane.
    std::uint32_t plane_point(const PlaneId& plane, FieldElem s, FieldElem t) const;

    /// Intersection graph between classes i and j, checked to be a disjoint
    /// union of q^{k-2} copies of K_{q,q}, one per plane.
    KqqReport verify_kqq_decomposition(FieldElem i, FieldElem j) const;

    /// q x q graph on (lines_in_plane(i), lines_in_plane(j)); (t, s) is an
    /// edge iff both incidences at plane_point(s, t) are kept by h.
    BipartiteGraph auxiliary_graph(const EdgeMask& h, const PlaneId& plane) const;
    std::size_t auxiliary_edge_count(const EdgeMask& h, const PlaneId& plane) const;

    /// Header lines for the graph-file export.
    std::vector<std::string> file_headers() const;
    std::string point_name(std::uint32_t point) const;
    std::string line_name(std::uint32_t line) const;

  private:
    std::vector<FieldElem> coords_of(std::uint64_t index, unsigned len) const;
    std::uint64_t index_of(const std::vector<FieldElem>& coords) const;
    std::vector<FieldElem> axpy(FieldElem s, const std::vector<FieldElem>& d, std::vector<FieldElem> x) const;

    FieldSpec field_;
    unsigned k_;
    std::uint32_t q_;
    std::uint32_t point_count_;
    std::uint32_t class_size_;
    std::vector<std::vector<FieldElem>> directions_;
    BipartiteGraph graph_;
};

/// "C8: P:<i> L:<a>:<b> ..." naming of a witness in W_k(q).
std::string format_witness(const WengerGeometry& geom, const CycleWitness& w);

}  // namespace evencycle

#endif
