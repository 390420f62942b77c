#pragma once

#include "bialg/core.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace bialg {

/// Two finite operation tables over one carrier; classified post-hoc as
/// ring / semiring / near-ring / field.
class RingTable {
public:
    static RingTable make(std::string name, std::vector<std::string> labels,
                          std::vector<int> add, std::vector<int> mul);

    int size() const { return static_cast<int>(labels_.size()); }
    int add(int i, int j) const { return add_[static_cast<size_t>(i) * labels_.size() + j]; }
    int mul(int i, int j) const { return mul_[static_cast<size_t>(i) * labels_.size() + j]; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }
    const std::vector<int>& add_table() const { return add_; }
    const std::vector<int>& mul_table() const { return mul_; }

    int index_of(const std::string& label) const;
    RingTable restrict_to(const std::vector<int>& subset, const std::string& name) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> add_, mul_;
};

/// Axiom flags plus the derived classification lattice and element lists.
struct RingClass {
    std::optional<int> zero; // additive identity
    std::optional<int> one;  // multiplicative identity

    bool add_commutative = false;
    bool add_associative = false;
    bool add_group = false;
    bool add_abelian_group = false;
    bool add_commutative_monoid = false;
    bool mul_semigroup = false;
    bool mul_commutative = false;
    bool left_distributive = false;
    bool right_distributive = false;
    bool strict_addition = false; // a+b = 0 implies a = b = 0

    // derived tags
    bool ring = false;
    bool commutative_ring = false;
    bool ring_with_unit = false;
    bool field = false;
    bool integral_domain = false;
    bool division_ring = false; // ring without nontrivial zero divisors
    bool semiring = false;
    bool semifield = false;
    bool right_near_ring = false;
    bool near_field = false;

    std::vector<int> zero_divisors;
    std::vector<int> units;
    std::vector<int> idempotents;
    std::vector<int> nilpotents;
};

RingClass classify_ringlike(const RingTable& rt);

/// S-ring witnesses: proper subsets closed under both tables that form a
/// field (level I) or a domain-like structure (level II).
struct SRingWitness {
    std::vector<int> elems;
    bool field = false;   // level I witness
    bool domain = false;  // level II witness (abelian +, mult semigroup, no zero divisors)
    std::optional<int> unit;
};

struct SRingDetection {
    bool s_ring_1 = false;
    bool s_ring_2 = false;
    std::vector<SRingWitness> witnesses;
};

SRingDetection s_ring_detect(const RingTable& rt);

struct SUnitCert { int x, y, a, b; };
struct SZeroDivisorCert { int x, y, a, b; };
struct SIdempotentCert { int x, a; };
struct SAntiZeroDivisorCert { int x, y, a, b; };

struct SElements {
    std::vector<SUnitCert> s_units;
    std::vector<SZeroDivisorCert> s_zero_divisors;
    std::vector<SIdempotentCert> s_idempotents;
    std::vector<SAntiZeroDivisorCert> s_anti_zero_divisors;
};

SElements s_elements(const RingTable& rt);

struct IfpReport {
    bool holds = true;
    std::optional<std::array<int, 3>> witness; // (a, n, b) with ab = 0 but anb != 0
};

/// Insertion-of-factors property: ab = 0 implies anb = 0 for every n.
IfpReport ifp_check(const RingTable& rt);

/// Union of 2 or 4 two-operation tables on incomparable supports.
struct BiRingLike {
    std::vector<std::string> universe;
    std::vector<RingTable> components;
    std::vector<std::string> sharing;

    // componentwise flags
    bool all_rings = false;
    bool all_fields = false;
    bool all_domains = false;
    bool all_division = false;
    bool all_semirings = false;
    bool all_semifields = false;
    bool all_near_rings = false;

    // k = 2 tags
    bool biring = false, bifield = false, bidomain = false, bidivision = false;
    bool bisemiring = false, bisemifield = false, binear_ring = false;
    bool biquasi_ring = false, biquasi_semiring = false, biquasi_near_ring = false;
    // k = 4 tags
    bool quad_ring = false, quad_domain = false, quad_field = false;

    std::string kind; // most specific tag

    int order() const { return static_cast<int>(universe.size()); }
};

BiRingLike assemble_ringlike_union(std::vector<RingTable> components,
                                   std::vector<std::string> sharing = {});

/// Polynomial with coefficients in Z_p, constant term first.
struct PolyOverZp {
    int p = 2;
    std::vector<int> coeffs; // degree <= cap (default 6)
};

enum class Reducibility { reducible, irreducible };
enum class Trichotomy { reducible, irreducible, neither };

const char* to_string(Reducibility r);
const char* to_string(Trichotomy t);

/// Exhaustive monic factor search after normalizing the leading coefficient.
Reducibility poly_reducibility(const PolyOverZp& poly, int degree_cap = 6);

/// Verdict over Z_p u Z_q: reducible iff reducible in both, irreducible iff
/// irreducible in both, else neither.
Trichotomy biring_trichotomy(const std::vector<int>& coeffs, int p, int q,
                             int degree_cap = 6);

/// Two-sided ideals (additive subgroup absorbing products), exhaustive for
/// carriers up to 12; CapExceeded above.
std::vector<std::vector<int>> enumerate_ideals(const RingTable& rt, int cap = 12);

/// Componentwise ideal pairs (tuples) of a ringlike union.
std::vector<std::vector<std::vector<int>>> enumerate_bi_ideals(const BiRingLike& u,
                                                               int cap = 12);

// generators for the finite semiring fixtures
RingTable chain_lattice(int n);                // join as +, meet as *
RingTable zn_ring(int n);                      // (Z_n, +, *)
RingTable zn_subring(int n, const std::vector<int>& subset, const std::string& name);

/// JSON two-op document: {"elements": [...], "add": [[...]], "mul": [[...]]}.
RingTable ringtable_from_json(const nlohmann::json& doc);
nlohmann::json ringtable_to_json(const RingTable& rt);
nlohmann::json ringclass_to_json(const RingTable& rt, const RingClass& rc);

} // namespace bialg
