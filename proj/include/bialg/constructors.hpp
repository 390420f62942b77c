#pragma once

#include "bialg/magma.hpp"

namespace bialg {

/// Tier of the modular-affine groupoid family a*b = ta + ub (mod n).
/// Each tier relaxes the constraints of the previous one.
enum class GroupoidTier {
    Z,    // t != u, both nonzero, gcd(t,u) = 1
    ZStar,  // drops coprimality
    ZStarStar, // allows t = u
    ZStarStarStar, // allows zero t or u
};

std::optional<GroupoidTier> tier_from_string(const std::string& s);
const char* to_string(GroupoidTier t);

/// Whether (t,u) is admissible for the tier over Z_n.
bool tier_accepts(GroupoidTier tier, int n, int t, int u);

// Named finite families, with fixed reference tables frozen in the tests.
Magma cyclic_group(int n);                 // <g | g^n = 1>, labels 1,g,g2,...
Magma zn_add(int n);                       // {0..n-1} under + mod n
Magma zn_mul(int n);                       // {0..n-1} under * mod n
Magma symmetric_group(int n);              // S_n, labels by one-line images
Magma alternating_group(int n);            // A_n
Magma dihedral_group(int n);               // order 2n, a^2 = b^n = 1, bab = a
Magma symmetric_semigroup(int n);          // all n^n self-maps, capped at n <= 5
Magma new_loop(int n, int m);              // carrier {e,1..n}, i*j = [mj-(m-1)i] mod n
Magma zn_groupoid(int n, int t, int u, GroupoidTier tier = GroupoidTier::ZStarStarStar);
Magma gl2(int p);                          // invertible 2x2 matrices over Z_p, p <= 7

/// Label of a 2x2 matrix [[a,b],[c,d]] as used by gl2.
std::string gl2_label(int a, int b, int c, int d);

/// Direct product of two magmas, labels "(x,y)".
Magma direct_product(const Magma& a, const Magma& b);

/// Same table with every label prefixed; used to keep the supports of a
/// union structure disjoint.
Magma relabeled(const Magma& m, const std::string& prefix);

/// Build a family from its CLI name plus integer parameters.
Magma build_family(const std::string& family, const std::vector<int>& params,
                   const std::string& tier = "z***");

} // namespace bialg
