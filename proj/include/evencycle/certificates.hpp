#ifndef EVENCYCLE_CERTIFICATES_HPP
#define EVENCYCLE_CERTIFICATES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "evencycle/bipartite_graph.hpp"
#include "evencycle/bounds.hpp"
#include "evencycle/cycle_search.hpp"
#include "evencycle/wenger.hpp"

namespace evencycle {

// Subgraphs H of W_5(q) are edge masks over WengerGeometry::graph().

/// Sum over points of C(deg_H(x), 2).
std::uint64_t cherry_count_degrees(const WengerGeometry& geom, const EdgeMask& h);

/// Sum over unordered class pairs i < j and their planes of the auxiliary
/// edge counts. Each cherry (x, two lines of distinct classes) is counted
/// once, matching the degree formula.
std::uint64_t cherry_count_planes(const WengerGeometry& geom, const EdgeMask& h);

struct CertificateReport {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t psi_degrees = 0;
    std::uint64_t psi_planes = 0;
    Rational lower_bound;
    KstTotal kst_cap_total;
    std::uint64_t max_aux_edges = 0;
    bool psi_identity = false;
    bool lower_bound_holds = false;
    bool aux_within_kst_cap = false;
    bool within_upper_bound = false;  // m <= B(q)
    std::optional<bool> generic_c8_free;  // set when a full C8 search was run

    bool passed() const {
        return psi_identity && lower_bound_holds && aux_within_kst_cap && within_upper_bound &&
               generic_c8_free.value_or(true);
    }
};

CertificateReport certify(const WengerGeometry& geom, const EdgeMask& h);

/// `q,m,psi,lower_bound_num,lower_bound_den,kst_cap_total,max_aux_edges,verdict`;
/// kst_cap_total is printed as its ceiling.
std::string certificate_csv_header();
std::string certificate_csv_row(const CertificateReport& r);

/// Turns a C4 (t1, s1, t2, s2 in auxiliary-graph indices) of the plane's
/// auxiliary graph into the C8 of H through the four meets. Throws
/// std::invalid_argument if the C4 is not present in the auxiliary graph.
CycleWitness lift_c4_to_c8(const WengerGeometry& geom, const EdgeMask& h, const PlaneId& plane,
                           const CycleWitness& c4);

enum class ExtractionStatus { Found, FoundGeneric, NotFoundAuxiliary, NotFound, Inconclusive };
const char* to_string(ExtractionStatus s);

enum class ExtractionMode { AuxiliaryOnly, AuxiliaryThenGeneric };

struct Provenance {
    FieldElem i;
    FieldElem j;
    std::uint32_t plane_index = 0;
    CycleWitness c4;
};

struct C8Extraction {
    ExtractionStatus status = ExtractionStatus::NotFound;
    std::optional<CycleWitness> witness;
    std::optional<Provenance> provenance;
};

/// Scans (i, j) lexicographically, planes by index; the first auxiliary C4
/// is lifted. Falls back to a generic C8 search in AuxiliaryThenGeneric mode.
C8Extraction extract_c8(const WengerGeometry& geom, const EdgeMask& h, ExtractionMode mode,
                        const SearchOptions& generic = {});

enum class GreedyOrder { Random, ClassRoundRobin };

struct GreedyResult {
    EdgeMask h;
    CertificateReport report;
    std::size_t rejected_by_budget = 0;
    bool verified_c8_free = false;
};

/// Inserts edges in the given order, keeping an edge iff no path of length
/// 7 joins its endpoints in the current subgraph. Edges whose check runs out
/// of budget are rejected.
GreedyResult greedy_c8free_subgraph(const WengerGeometry& geom, std::uint64_t seed, GreedyOrder order,
                                    std::uint64_t per_edge_budget = 0);

struct C8FreeVerification {
    bool c4_free_in_all_auxiliaries = false;
    std::uint64_t max_aux_edges = 0;
    std::optional<CycleWitness> lifted_c8;  // from the first auxiliary C4
    SearchStatus generic_status = SearchStatus::Inconclusive;
    std::optional<CycleWitness> generic_c8;

    bool c8_free() const { return c4_free_in_all_auxiliaries && generic_status == SearchStatus::NotFound; }
};

C8FreeVerification verify_c8_free(const WengerGeometry& geom, const EdgeMask& h, const SearchOptions& generic = {});

enum class ExactMethod { Exhaustive, HittingSet };

struct ExactExtremal {
    std::size_t value = 0;
    EdgeMask certificate;  // a C8-free subgraph with `value` edges
    std::size_t cycles = 0;  // 8-cycles of the host (hitting-set method)
    std::uint64_t nodes = 0;
};

inline constexpr std::size_t kExhaustiveEdgeLimit = 24;
inline constexpr std::size_t kHittingSetEdgeLimit = 64;

/// Maximum size of a C8-free spanning subgraph of a small host graph.
/// Exhaustive: all 2^m edge subsets, C8 search on each (m <= 24).
/// HittingSet: branch and bound for a minimum edge set meeting every 8-cycle
/// (m <= 64). Throws std::invalid_argument above the limits.
ExactExtremal exact_max_c8free(const BipartiteGraph& g, ExactMethod method);

}  // namespace evencycle

#endif
