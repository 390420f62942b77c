#pragma once

#include "bialg/bistruct.hpp"
#include "bialg/magma.hpp"

namespace bialg {

/// A subset of a carrier that forms a richer structure than its parent.
struct SWitness {
    std::vector<int> elems;
    MagmaKind kind = MagmaKind::groupoid;
    bool maximal = false;           // maximal subgroup anchored at an idempotent
    std::optional<int> identity;    // local identity of the witness, if any
};

struct SDetection {
    std::string target;
    bool smarandache = false;
    std::vector<SWitness> witnesses;
};

enum class STarget { group_in_semigroup, semigroup_in_groupoid, group_in_loop };

std::optional<STarget> starget_from_string(const std::string& s);
const char* to_string(STarget t);

/// Proper subsets of the weaker structure forming the richer kind.
///
/// Group-in-semigroup witnesses are the maximal subgroups anchored at each
/// idempotent (plus their own subgroups, marked non-maximal).  With
/// `nontrivial_only` singleton witnesses are dropped.
SDetection s_detect(const Magma& m, STarget target, bool nontrivial_only = false);

/// Maximal subgroup at idempotent e: {x : ex = xe = x and some y has xy = yx = e}.
std::vector<int> maximal_subgroup_at(const Magma& m, int e);

std::vector<int> idempotents(const Magma& m);

/// Detection across a union structure: S-bigroup / S-bisemigroup / S-biloop /
/// S-bigroupoid patterns, each with explicit witnesses.
struct SBiDetection {
    BiKind base = BiKind::invalid;
    std::string s_kind;                 // "S-bigroup", "S-biloop", ... or "" if none
    bool smarandache = false;
    std::vector<SubBiStructure> witnesses; // proper subsets witnessing the richer kind
};

SBiDetection s_bi_detect(const BiStructure& bs);

struct SCauchyRow {
    int component;
    int element;
    int order;
};

/// S-special Cauchy: least n > 1 with x^n = identity divides the union order.
/// S-Cauchy: n is a proper divisor of the order of x's component.
struct SCauchyReport {
    std::vector<SCauchyRow> s_cauchy;
    std::vector<SCauchyRow> s_special_cauchy;
};

SCauchyReport s_cauchy(const BiStructure& bs);

enum class SProperty { commutative, cyclic, lagrange, hyper, simple };

std::optional<SProperty> sproperty_from_string(const std::string& s);

struct SGradeReport {
    std::string property;
    bool strong = false; // all witnesses have the property
    bool weak = false;   // at least one witness has it
    // Lagrange verdicts (property == lagrange)
    bool s_lagrange = false, s_weakly_lagrange = false, s_non_lagrange = false;
    // hyper witness (property == hyper/simple)
    std::optional<SubBiStructure> hyper;
    bool simple = false;
};

SGradeReport s_grade(const BiStructure& bs, SProperty prop);

/// Grades of a single table (a semigroup with group witnesses): the property
/// over all witnesses (strong) or at least one (weak); Lagrange verdicts over
/// witness orders; hyper = a proper closed superset of a largest witness.
SGradeReport s_grade_magma(const Magma& m, SProperty prop);

/// Candidate operation for S-biset checks: x op y mod modulus.
struct ModularOp {
    bool multiply = true; // otherwise addition
    long long modulus = 0;
};

struct SBisetReport {
    bool s_biset = false;
    std::vector<long long> witness1, witness2; // closed proper subsets
    ModularOp op1, op2;
};

/// True iff each side of the biset has a proper subset closed under one of
/// the declared modular operations.
SBisetReport s_biset(const std::vector<long long>& a1, const std::vector<long long>& a2,
                     const std::vector<ModularOp>& candidates);

struct SInversePair {
    int x, y; // xy = 1
    int a, b; // the related pair: ab = 1 with a product link to x or y
};

/// Bounded scan for the linked inverse pairs (x,y) with relation pair (a,b).
std::vector<SInversePair> s_inverse_pairs(const Magma& m, int max_pairs = 256);

struct SConjugatePair {
    int x, y, a; // xa = ay, plus b, c with ab = bx and ac = cy
};

/// Bounded scan for conjugate-linked pairs.
std::vector<SConjugatePair> s_conjugate_pairs(const Magma& m, int max_pairs = 256);

nlohmann::json sdetection_to_json(const Magma& m, const SDetection& d);

} // namespace bialg
