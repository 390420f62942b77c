#include "bialg/convolution.hpp"

#include <algorithm>

namespace bialg {

namespace {

long long reduce(const ConvAlgebra& alg, long long v) {
    if (alg.modulus > 0) return mod_floor(v, alg.modulus);
    if (v > alg.coeff_bound || v < -alg.coeff_bound)
        fail("CoefficientOverflow", "integer coefficient exceeded the configured bound");
    return v;
}

void check_dim(const ConvAlgebra& alg, const ConvElement& a) {
    if (static_cast<int>(a.coeffs.size()) != alg.dim())
        fail("AlgebraMismatch", "element has the wrong coefficient length");
}

} // namespace

ConvElement conv_zero(const ConvAlgebra& alg) {
    return {std::vector<long long>(alg.dim(), 0)};
}

ConvElement conv_basis(const ConvAlgebra& alg, int index, long long coeff) {
    auto e = conv_zero(alg);
    e.coeffs[index] = reduce(alg, coeff);
    return e;
}

ConvElement conv_make(const ConvAlgebra& alg, std::vector<long long> coeffs) {
    if (static_cast<int>(coeffs.size()) != alg.dim())
        fail("AlgebraMismatch", "coefficient vector length mismatch");
    for (auto& c : coeffs) c = reduce(alg, c);
    return {std::move(coeffs)};
}

ConvElement conv_add(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b) {
    check_dim(alg, a);
    check_dim(alg, b);
    ConvElement out = conv_zero(alg);
    for (int i = 0; i < alg.dim(); ++i) out.coeffs[i] = reduce(alg, a.coeffs[i] + b.coeffs[i]);
    return out;
}

ConvElement conv_sub(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b) {
    check_dim(alg, a);
    check_dim(alg, b);
    ConvElement out = conv_zero(alg);
    for (int i = 0; i < alg.dim(); ++i) out.coeffs[i] = reduce(alg, a.coeffs[i] - b.coeffs[i]);
    return out;
}

ConvElement conv_mul(const ConvAlgebra& alg, const ConvElement& a, const ConvElement& b) {
    check_dim(alg, a);
    check_dim(alg, b);
    ConvElement out = conv_zero(alg);
    for (int i = 0; i < alg.dim(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (b.coeffs[j] == 0) continue;
            int k = alg.basis.op(i, j);
            out.coeffs[k] = reduce(alg, out.coeffs[k] + a.coeffs[i] * b.coeffs[j]);
        }
    }
    return out;
}

bool conv_is_zero(const ConvAlgebra& alg, const ConvElement& a) {
    check_dim(alg, a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](long long c) { return c == 0; });
}

long long augmentation(const ConvAlgebra& alg, const ConvElement& a) {
    check_dim(alg, a);
    long long s = 0;
    for (long long c : a.coeffs) s = reduce(alg, s + c);
    return s;
}

bool augmentation_ideal_member(const ConvAlgebra& alg, const ConvElement& a) {
    return augmentation(alg, a) == 0;
}

std::pair<ConvElement, ConvElement> zero_divisor_witness(const ConvAlgebra& alg, int g) {
    if (!classify(alg.basis).associative)
        fail("NonAssociativeBasis", "the telescoping identity needs an associative basis");
    auto e = alg.basis.identity();
    if (!e) fail("NoIdentity", "basis has no identity");
    auto n = element_order(alg.basis, g);
    if (!n || *n <= 1) fail("NoTorsion", "basis element has no order > 1");

    auto alpha = conv_sub(alg, conv_basis(alg, *e), conv_basis(alg, g));
    auto beta = conv_zero(alg);
    int acc = *e;
    for (int k = 0; k < *n; ++k) {
        beta.coeffs[acc] = reduce(alg, beta.coeffs[acc] + 1);
        acc = alg.basis.op(acc, g);
    }
    auto prod = conv_mul(alg, alpha, beta);
    if (!conv_is_zero(alg, prod))
        fail("InternalError", "zero-divisor certificate failed to verify");
    return {alpha, beta};
}

const char* to_string(ClosureClass c) {
    switch (c) {
        case ClosureClass::group: return "group";
        case ClosureClass::semigroup: return "semigroup";
        case ClosureClass::not_closed: return "not-closed";
    }
    return "?";
}

Envelope mod_p_envelope(int p, const Magma& basis, long long cap) {
    if (!is_prime(p)) fail("BadParameters", "envelope modulus must be prime");
    auto e = basis.identity();
    if (!e) fail("NoIdentity", "envelope needs a basis identity");
    const int n = basis.size();
    long long count = 1;
    for (int i = 1; i < n; ++i) {
        count *= p;
        if (count > cap) fail("CapExceeded", "p^(|basis|-1) above cap");
    }

    ConvAlgebra alg{basis, p};
    Envelope env;
    env.p = p;
    // enumerate the augmentation kernel: free coefficients on all basis
    // elements except the identity slot, which absorbs the balance
    std::vector<long long> free(n - 1, 0);
    while (true) {
        ConvElement u = conv_zero(alg);
        long long s = 0;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            if (i == *e) continue;
            u.coeffs[i] = free[k++];
            s += u.coeffs[i];
        }
        u.coeffs[*e] = mod_floor(-s, p);
        env.elements.push_back(conv_add(alg, conv_basis(alg, *e), u));
        int j = 0;
        while (j < n - 1 && ++free[j] == p) free[j++] = 0;
        if (j == n - 1) break;
    }

    // closure classification by exhaustive pairwise products
    auto find = [&](const ConvElement& x) {
        for (size_t i = 0; i < env.elements.size(); ++i)
            if (env.elements[i].coeffs == x.coeffs) return static_cast<int>(i);
        return -1;
    };
    const int m = static_cast<int>(env.elements.size());
    std::vector<int> table(static_cast<size_t>(m) * m, -1);
    bool closed = true;
    for (int i = 0; i < m && closed; ++i)
        for (int j = 0; j < m; ++j) {
            int k = find(conv_mul(alg, env.elements[i], env.elements[j]));
            if (k < 0) {
                closed = false;
                break;
            }
            table[static_cast<size_t>(i) * m + j] = k;
        }
    if (!closed) {
        env.closure = ClosureClass::not_closed;
        return env;
    }
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i));
    auto as_magma = Magma::make("envelope", labels, table);
    auto r = classify(as_magma);
    env.closure = is_group(r) ? ClosureClass::group
                  : r.associative ? ClosureClass::semigroup
                                  : ClosureClass::not_closed;
    return env;
}

std::pair<Envelope, Envelope> bimod_envelope(int p, int q, const Magma& basis,
                                             long long cap) {
    if (p == q) fail("BadParameters", "bimod envelope needs distinct primes");
    return {mod_p_envelope(p, basis, cap), mod_p_envelope(q, basis, cap)};
}

nlohmann::json conv_to_json(const ConvAlgebra& alg, const ConvElement& a) {
    nlohmann::json j;
    j["coeffs"] = a.coeffs;
    j["basis"] = alg.basis.name();
    return j;
}

ConvElement conv_from_json(const ConvAlgebra& alg, const nlohmann::json& doc) {
    if (!doc.contains("coeffs")) fail("SchemaError", "element needs 'coeffs'");
    return conv_make(alg, doc["coeffs"].get<std::vector<long long>>());
}

} // namespace bialg
