#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "evencycle/cycle_search.hpp"
#include "evencycle/wenger.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

std::vector<FieldElem> elems(std::initializer_list<std::uint32_t> xs) {
    std::vector<FieldElem> out;
    for (auto x : xs) out.push_back(FieldElem{x});
    return out;
}

}  // namespace

TEST_CASE("construction sizes") {
    const WengerGeometry w3(FieldSpec::for_order(3));
    CHECK(w3.point_count() == 243);
    CHECK(w3.line_count() == 243);
    CHECK(w3.edge_count() == 729);
    const WengerGeometry w2(FieldSpec::for_order(2));
    CHECK(w2.edge_count() == 64);
    for (std::uint32_t v = 0; v < 32; ++v) {
        CHECK(w2.graph().left_degree(v) == 2);
        CHECK(w2.graph().right_degree(v) == 2);
    }
    const WengerGeometry w4(FieldSpec::for_order(4));
    CHECK(w4.class_size() == 256);
    std::vector<std::size_t> per_class(4, 0);
    for (std::uint32_t l = 0; l < w4.line_count(); ++l) ++per_class[w4.line(l).a.index];
    CHECK(per_class == std::vector<std::size_t>(4, 256));
    CHECK_THROWS_AS(WengerGeometry(FieldSpec::for_order(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(WengerGeometry(FieldSpec::for_order(3), 9), std::invalid_argument);
    CHECK_THROWS_AS(WengerGeometry(FieldSpec::for_order(64), 5), std::invalid_argument);
}

TEST_CASE("incidences match the oracle construction") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const WengerGeometry g(FieldSpec::for_order(q));
        const oracle::Field f(g.field().p(), g.field().e(), g.field().modulus());
        std::vector<std::pair<std::uint32_t, std::uint32_t>> lib;
        for (const auto& e : g.graph().edges()) lib.emplace_back(e.left, e.right);
        CHECK(lib == oracle::wenger5_incidences(f));
        for (std::uint32_t x = 0; x < g.point_count(); x += 7) {
            for (std::uint32_t a = 0; a < q; ++a) {
                const std::size_t e = g.incidence_edge(x, FieldElem{a});
                CHECK(g.graph().edges()[e] == Edge{x, g.line_through(x, FieldElem{a})});
            }
        }
    }
}

TEST_CASE("line_through examples") {
    const WengerGeometry g(FieldSpec::for_order(3));
    const Point origin = g.point(elems({0, 0, 0, 0, 0}));
    for (std::uint32_t a = 0; a < 3; ++a) {
        const LineId l = g.line_through(origin, FieldElem{a});
        CHECK(l.a == FieldElem{a});
        CHECK(l.base == elems({0, 0, 0, 0}));
    }
    const Point x = g.point(elems({1, 1, 0, 0, 0}));
    const LineId l = g.line_through(x, FieldElem{1});
    CHECK(l.base == elems({0, 2, 2, 2}));
    const auto pts = g.points_on_line(l);
    REQUIRE(pts.size() == 3);
    CHECK(std::find(pts.begin(), pts.end(), x.index) != pts.end());
    for (auto p : pts) CHECK(g.contains(l, g.point(p)));
    CHECK(g.point(elems({0, 0, 2, 2, 2})).index == pts[0]);
}

TEST_CASE("index round trips for q <= 4") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const WengerGeometry g(FieldSpec::for_order(q));
        for (std::uint32_t i = 0; i < g.point_count(); ++i) {
            REQUIRE(g.point(i).index == i);
            REQUIRE(g.point(g.point(i).coords).index == i);
            REQUIRE(g.line_index(g.line(i)) == i);
        }
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = a + 1; b < q; ++b) {
                for (std::uint32_t r = 0; r < g.planes_per_pair(); ++r) {
                    REQUIRE(g.plane_index(g.plane(FieldElem{a}, FieldElem{b}, r)) == r);
                }
            }
        }
        CHECK_THROWS(g.plane(FieldElem{0}, FieldElem{1}, g.planes_per_pair()));
    }
}

TEST_CASE("intersection points against brute force") {
    const WengerGeometry g(FieldSpec::for_order(3));
    const Point origin = g.point(0);
    const auto meet0 = g.intersection_point(g.line_through(origin, FieldElem{0}), g.line_through(origin, FieldElem{2}));
    REQUIRE(meet0);
    CHECK(*meet0 == origin);

    std::mt19937_64 rng(3);
    std::size_t skew = 0, meeting = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng() % 243), b = static_cast<std::uint32_t>(rng() % 243);
        const LineId la = g.line(a), lb = g.line(b);
        if (la.a == lb.a) {
            CHECK_THROWS_AS(g.intersection_point(la, lb), std::invalid_argument);
            continue;
        }
        const auto pa = g.points_on_line(la), pb = g.points_on_line(lb);
        std::vector<std::uint32_t> common;
        for (auto p : pa) {
            if (std::find(pb.begin(), pb.end(), p) != pb.end()) common.push_back(p);
        }
        REQUIRE(common.size() <= 1);
        const auto meet = g.intersection_point(la, lb);
        CHECK(meet.has_value() == (common.size() == 1));
        if (meet) {
            ++meeting;
            CHECK(meet->index == common[0]);
            const PlaneId plane = g.plane_of(la, lb);
            CHECK(g.contains(plane, *meet));
        } else {
            ++skew;
            CHECK_THROWS_AS(g.plane_of(la, lb), std::domain_error);
        }
    }
    CHECK(skew > 0);
    // Meeting pairs are rare at random; build some explicitly.
    for (std::uint32_t x = 0; x < 243; x += 11) {
        const LineId li = g.line_through(g.point(x), FieldElem{0});
        const LineId lj = g.line_through(g.point(x), FieldElem{1});
        const auto meet = g.intersection_point(li, lj);
        REQUIRE(meet);
        CHECK(meet->index == x);
        CHECK(g.contains(li, *meet));
        CHECK(g.contains(lj, *meet));
        ++meeting;
    }
    CHECK(meeting > 0);
}

TEST_CASE("planes and their lines") {
    const WengerGeometry g(FieldSpec::for_order(4));
    const Point origin = g.point(0);
    const PlaneId plane = g.plane_of(g.line_through(origin, FieldElem{1}), g.line_through(origin, FieldElem{3}));
    CHECK(plane.rep == elems({0, 0, 0}));
    CHECK(g.plane_index(plane) == 0);
    for (FieldElem c : {FieldElem{1}, FieldElem{3}}) {
        const auto lines = g.lines_in_plane(plane, c);
        REQUIRE(lines.size() == 4);
        std::set<std::uint32_t> distinct;
        for (const auto& l : lines) {
            CHECK(l.a == c);
            distinct.insert(g.line_index(l));
            for (auto p : g.points_on_line(l)) CHECK(g.contains(plane, g.point(p)));
        }
        CHECK(distinct.size() == 4);
    }
    CHECK_THROWS(g.lines_in_plane(plane, FieldElem{2}));
    std::set<std::uint32_t> pts;
    for (std::uint32_t s = 0; s < 4; ++s) {
        for (std::uint32_t t = 0; t < 4; ++t) pts.insert(g.plane_point(plane, FieldElem{s}, FieldElem{t}));
    }
    CHECK(pts.size() == 16);
}

TEST_CASE("K_{q,q} decomposition") {
    for (std::uint32_t q : {2u, 3u}) {
        const WengerGeometry g(FieldSpec::for_order(q));
        for (std::uint32_t i = 0; i < q; ++i) {
            for (std::uint32_t j = i + 1; j < q; ++j) {
                const KqqReport rep = g.verify_kqq_decomposition(FieldElem{i}, FieldElem{j});
                CHECK(rep.ok());
                CHECK(rep.component_count == q * q * q);
                CHECK(rep.intersecting_pairs == std::size_t{q} * q * q * q * q);
            }
        }
    }
}

TEST_CASE("auxiliary graphs") {
    const WengerGeometry g(FieldSpec::for_order(3));
    const PlaneId plane = g.plane(FieldElem{0}, FieldElem{2}, 5);
    CHECK(g.auxiliary_graph(g.full_mask(), plane).edge_count() == 9);
    CHECK(g.auxiliary_graph(g.empty_mask(), plane).edge_count() == 0);

    for (std::uint32_t s = 0; s < 3; ++s) {
        for (std::uint32_t t = 0; t < 3; ++t) {
            const std::uint32_t x = g.plane_point(plane, FieldElem{s}, FieldElem{t});
            EdgeMask h = g.full_mask();
            for (std::uint32_t a = 0; a < 3; ++a) h.reset(g.incidence_edge(x, FieldElem{a}));
            const BipartiteGraph aux = g.auxiliary_graph(h, plane);
            CHECK(aux.edge_count() == 8);
            CHECK(g.auxiliary_edge_count(h, plane) == 8);
            const auto li = g.lines_in_plane(plane, FieldElem{0});
            const auto lj = g.lines_in_plane(plane, FieldElem{2});
            const LineId xi = g.line_through(g.point(x), FieldElem{0});
            const LineId xj = g.line_through(g.point(x), FieldElem{2});
            const auto ti = static_cast<std::uint32_t>(std::find(li.begin(), li.end(), xi) - li.begin());
            const auto sj = static_cast<std::uint32_t>(std::find(lj.begin(), lj.end(), xj) - lj.begin());
            REQUIRE(ti < 3);
            REQUIRE(sj < 3);
            CHECK_FALSE(aux.has_edge(ti, sj));
        }
    }
}

TEST_CASE("girth of small Wenger graphs") {
    for (std::uint32_t q : {2u, 3u}) {
        const WengerGeometry g(FieldSpec::for_order(q));
        CHECK(girth_bipartite(g.graph()) == 8u);
    }
}

TEST_CASE("naming and headers") {
    const WengerGeometry g(FieldSpec::for_order(4));
    CHECK(g.file_headers() == std::vector<std::string>{"# wenger k=5 q=4 p=2 e=2 modulus=1,1,1"});
    CHECK(g.point_name(17) == "P:17");
    CHECK(g.line_name(3 * 256 + 9) == "L:3:9");
    const CycleWitness w{{{Side::Left, 1}, {Side::Right, 300}}};
    CHECK(format_witness(g, w) == "C2: P:1 L:1:44");
}
