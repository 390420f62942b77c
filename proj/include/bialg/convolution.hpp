#pragma once

#include "bialg/magma.hpp"

namespace bialg {

/// Free module over Z_m (m = 0 for bounded integers) with a finite magma as
/// basis and convolution product.
struct ConvAlgebra {
    Magma basis;
    long long modulus = 0;            // 0 = integer coefficients
    long long coeff_bound = 1000000;  // magnitude bound in integer mode

    int dim() const { return basis.size(); }
};

struct ConvElement {
    std::vector<long long> coeffs; // indexed by basis elements
};

ConvElement conv_zero(const ConvAlgebra& alg);
ConvElement conv_basis(const ConvAlgebra& alg, int index, long long coeff = 1);
ConvElement conv_make(const ConvAlgebra& alg, std::vector<long long> coeffs);

ConvElement conv_add(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b);
ConvElement conv_sub(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b);

/// (a*b)[k] = sum over i*j = k of a[i]b[j], reduced mod m (m > 0) or bound-
/// checked (m = 0; overflow is an error, never silent wraparound).
ConvElement conv_mul(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b);

bool conv_is_zero(const ConvAlgebra& alg, const ConvElement& a);

long long augmentation(const ConvAlgebra& alg, const ConvElement& a);
bool augmentation_ideal_member(const ConvAlgebra& alg, const ConvElement& a);

/// The telescoping zero-divisor pair alpha = 1 - g, beta = 1 + g + ... +
/// g^(n-1) for a torsion basis element; verified before returning.
std::pair<ConvElement, ConvElement> zero_divisor_witness(const ConvAlgebra& alg, int g);

/// Multiplicative structure of a finite coefficient set: not_closed covers
/// everything short of a semigroup (a leak, or closure without
/// associativity as happens over non-associative bases).
enum class ClosureClass { group, semigroup, not_closed };
const char* to_string(ClosureClass c);

/// Coset 1 + U of the augmentation kernel over Z_p, classified by exhaustive
/// pairwise multiplication.
struct Envelope {
    int p = 2;
    std::vector<ConvElement> elements;
    ClosureClass closure = ClosureClass::not_closed;
};

Envelope mod_p_envelope(int p, const Magma& basis, long long cap = 20000);

/// Componentwise envelopes at two distinct primes over the same basis.
std::pair<Envelope, Envelope> bimod_envelope(int p, int q, const Magma& basis,
                                             long long cap = 20000);

nlohmann::json conv_to_json(const ConvAlgebra& alg, const ConvElement& a);
ConvElement conv_from_json(const ConvAlgebra& alg, const nlohmann::json& doc);

} // namespace bialg
