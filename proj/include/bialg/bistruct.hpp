#pragma once

#include "bialg/magma.hpp"

namespace bialg {

/// One component of a union structure: a magma living on a labeled support
/// inside the shared universe.
struct BiComponent {
    Magma algebra; // labels of the algebra are the support
};

enum class BiKind {
    bigroup,
    bisemigroupII,
    biloop,
    bigroupoid,
    biquasi_group,
    biquasi_loop,
    biquasi_semigroup,
    biquasi_groupoid,
    quad_group,
    invalid,
};

const char* to_string(BiKind k);

/// A structure presented as the union of k = 2 or 4 labeled components.
/// Components are label-disjoint unless a label is declared in `sharing`.
struct BiStructure {
    std::vector<std::string> universe;
    std::vector<BiComponent> components;
    std::vector<std::string> sharing;

    int order() const { return static_cast<int>(universe.size()); }
    int arity() const { return static_cast<int>(components.size()); }
    const Magma& part(int i) const { return components[i].algebra; }
};

/// Validates supports (incomparable, covering, sharing declared) and builds
/// the union.  Errors: NestedSupports, UncoveredUniverse, UndeclaredSharing.
BiStructure assemble(std::vector<Magma> components,
                     std::vector<std::string> sharing = {});

BiKind classify_bi(const BiStructure& bs);

/// Componentwise subalgebras H_i with derived order (of the union) and
/// biorder (sum of component orders).
struct SubBiStructure {
    std::vector<std::vector<int>> parts; // indices into each component
    std::set<std::string> labels;        // union of part labels
    int order = 0;                       // |union|
    int biorder = 0;                     // sum of |H_i|
};

SubBiStructure make_sub(const BiStructure& bs, std::vector<std::vector<int>> parts);

/// All pairs (tuples) of componentwise subalgebras of the kind matching the
/// structure (subgroups for bigroups, subloops for biloops, ...).
std::vector<SubBiStructure> enumerate_sub(const BiStructure& bs);

enum class LagrangeVerdict { lagrange, weakly, non_lagrange };
const char* to_string(LagrangeVerdict v);

struct LagrangeEntry {
    SubBiStructure sub;
    int order;
    bool divides;
};

/// Divisibility scan over all proper sub-bistructures.  The all-trivial pair
/// and the whole structure are excluded as improper.
struct LagrangeReport {
    int order = 0;
    std::vector<LagrangeEntry> entries;
    LagrangeVerdict verdict = LagrangeVerdict::lagrange;
};

LagrangeReport lagrange_report(const BiStructure& bs);

/// Biorder bookkeeping of an arbitrary componentwise subset (the parts need
/// not be subalgebras).
struct BiorderReport {
    int order = 0;   // |union of parts|
    int biorder = 0; // sum of part sizes
    bool biorder_divides_order = false;       // B(H) | o(G)
    bool pseudo_divides = false;              // every |H_i| divides |G_i|
    std::vector<bool> component_divisibility; // per component
};

BiorderReport biorder_and_pseudo(const BiStructure& bs,
                                 const std::vector<std::vector<int>>& parts);

struct CauchyRow {
    int component;
    int element; // index within the component
    int order;
    bool divides_union_order;
};

/// Left-normed orders of all elements (per component), flagged against the
/// union order.
std::vector<CauchyRow> cauchy_elements(const BiStructure& bs);

/// (p1,p2)-Sylow sub-bistructures: Sylow-p1 of the first component crossed
/// with Sylow-p2 of the second.
std::vector<SubBiStructure> sylow_search(const BiStructure& bs, int p1, int p2);

/// Sub-bistructures whose union order is p^a with p^a | o(G), p^(a+1) not.
std::vector<SubBiStructure> sylow_p(const BiStructure& bs, int p);

enum class CosetSide { left, right };

/// Bicoset of H at a: the case split follows the element's membership
/// (only first support / only second / shared).
std::set<std::string> bicoset(const BiStructure& bs, const SubBiStructure& h,
                              const std::string& a, CosetSide side = CosetSide::right);

/// Componentwise normality: xP = Px, (Px)y = P(xy), y(xP) = (yx)P scanned
/// exhaustively in every component.
bool normal_check(const BiStructure& bs, const SubBiStructure& h);

/// Verifies a user-supplied componentwise map between two union structures:
/// each component map must be a homomorphism of the matching tables.
/// (Homomorphism search is out of scope; only verification is offered.)
bool verify_bi_homomorphism(const BiStructure& from, const BiStructure& to,
                            const std::vector<std::vector<int>>& maps);

/// Componentwise quotients by a normal sub-bistructure; no union quotient is
/// defined beyond the component list.
std::vector<Magma> componentwise_quotients(const BiStructure& bs, const SubBiStructure& h);

BiStructure bistructure_from_json(const nlohmann::json& doc);
nlohmann::json bistructure_to_json(const BiStructure& bs);

} // namespace bialg
