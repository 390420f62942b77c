#pragma once

#include "bialg/core.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace bialg {

/// A finite binary operation given by its full Cayley table.
///
/// Entries are indices into `labels`; closure is enforced at construction.
/// Everything downstream (classification, identities, substructure search)
/// works by exhaustive scans over this table.
class Magma {
public:
    static Magma make(std::string name, std::vector<std::string> labels,
                      std::vector<int> table_row_major);

    int size() const { return static_cast<int>(labels_.size()); }
    int op(int i, int j) const { return table_[static_cast<size_t>(i) * labels_.size() + j]; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& table() const { return table_; }
    const std::string& name() const { return name_; }

    /// Index of a label; UnknownLabel if absent.
    int index_of(const std::string& label) const;
    std::optional<int> find(const std::string& label) const;

    /// Restriction of the table to a closed subset (indices must be closed).
    Magma restrict_to(const std::vector<int>& subset, const std::string& name) const;

    /// Two-sided identity element, if any.
    std::optional<int> identity() const;

    /// Left-normed power x^k (x^1 = x, x^{k+1} = x^k * x).
    int power(int x, int k) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> table_;
};

enum class MagmaKind { groupoid, quasigroup, semigroup, monoid, loop, group };

const char* to_string(MagmaKind k);

/// Outcome of the exhaustive axiom scan.  Every failed axiom carries a
/// concrete witness tuple that re-fails on recheck.
struct ClassificationReport {
    MagmaKind kind = MagmaKind::groupoid;
    bool associative = false;
    bool commutative = false;
    bool idempotent = false; // x*x = x for every x
    bool latin = false;      // every row and column a permutation
    bool has_inverses = false;
    std::optional<int> identity;
    std::optional<std::array<int, 3>> assoc_witness; // (a,b,c) with (ab)c != a(bc)
    std::optional<std::array<int, 2>> comm_witness;  // (a,b) with ab != ba
    std::optional<int> idem_witness;                 // x with xx != x
    std::optional<std::array<int, 3>> latin_witness; // (row?1:0, line, duplicated value)
    std::optional<int> inverse_witness;              // x with no two-sided inverse
};

ClassificationReport classify(const Magma& m);

bool is_group(const ClassificationReport& r);
bool is_loop_or_group(const ClassificationReport& r);
bool is_semigroup(const ClassificationReport& r);

enum class IdentityKind {
    Associative,
    Moufang1, // (xy)(zx) = (x(yz))x
    Moufang2, // ((xy)z)y = x(y(zy))
    Moufang3, // x(y(xz)) = ((xy)x)z
    Bol,      // ((xy)z)y = x((yz)y)
    Bruck,    // (x(yx))z = x(y(xz)) and (xy)^-1 = x^-1 y^-1
    LeftAlternative,
    RightAlternative,
    WIP,       // (xy)z = e implies x(yz) = e
    PIdentity, // (xy)x = x(yx)
    Semialternative, // associator (x,y,z) = (y,z,x); needs a loop
};

std::optional<IdentityKind> identity_kind_from_string(const std::string& s);
const char* to_string(IdentityKind k);

struct IdentityCheck {
    bool holds = false;
    std::optional<std::vector<int>> witness; // lexicographically first failing tuple
    std::vector<int> skipped;                // elements whose inverse clause was vacuous (Bruck)
};

/// Exhaustive identity check; NotApplicable for Bruck/WIP without identity.
IdentityCheck check_identity(const Magma& m, IdentityKind kind);

enum class SubKind { subsemigroup, subgroup, subloop };

struct SubalgebraList {
    std::vector<std::vector<int>> sets;
    bool exhaustive = true;
};

/// All closed subsets of the requested kind.  Exhaustive (full subset scan)
/// for n <= exhaustive_cap; above that, closures of all seeds of size <= 2,
/// flagged non-exhaustive.  CapExceeded when exhaustiveness is demanded on a
/// carrier above the cap.
SubalgebraList enumerate_subalgebras(const Magma& m, SubKind kind,
                                     int max_count = 1 << 20,
                                     bool require_exhaustive = false,
                                     int exhaustive_cap = 12);

/// Closure of a generating set under the table.
std::vector<int> closure(const Magma& m, std::vector<int> seed);

/// Nuclei, centers and commutator/associator subloops of a loop.
struct LoopInvariants {
    std::vector<int> left_nucleus;
    std::vector<int> middle_nucleus;
    std::vector<int> right_nucleus;
    std::vector<int> nucleus;
    std::vector<int> moufang_center; // elements commuting with everything
    std::vector<int> center;         // nucleus intersect moufang center
    std::vector<int> commutator_subloop;
    std::vector<int> associator_subloop;
};

LoopInvariants local_invariants(const Magma& m); // NotALoop unless loop

/// Least k >= 1 with left-normed x^k = identity, if reached.
std::optional<int> element_order(const Magma& m, int x); // NoIdentity without identity

/// Elements commuting with a: {x : xa = ax}.
std::vector<int> normalizer(const Magma& m, int a);

/// Coset table G/H of a group by a normal subgroup; NotNormal otherwise.
Magma quotient_group(const Magma& g, const std::vector<int>& normal_subgroup);

/// JSON document: {"name": ..., "elements": [...], "table": [[...]]}.
Magma magma_from_json(const nlohmann::json& doc);
nlohmann::json magma_to_json(const Magma& m);

nlohmann::json classification_to_json(const Magma& m, const ClassificationReport& r);

} // namespace bialg
