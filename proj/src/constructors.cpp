#include "bialg/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bialg {

namespace {

Magma from_op(const std::string& name, std::vector<std::string> labels,
              const std::function<int(int, int)>& op) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tab[static_cast<size_t>(i) * n + j] = op(i, j);
    return Magma::make(name, std::move(labels), std::move(tab));
}

// Maps {1..n} -> {1..n} by their one-line image string ("231" sends 1->2, 2->3, 3->1).
std::string map_label(const std::vector<int>& img) {
    std::string s;
    for (int v : img) s += std::to_string(v + 1);
    return s;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

// Composition convention throughout: (f . g)(x) = f(g(x)).
Magma maps_magma(const std::string& name, std::vector<std::vector<int>> maps) {
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    for (const auto& f : maps) {
        labels.push_back(map_label(f));
        index[labels.back()] = static_cast<int>(labels.size()) - 1;
    }
    return from_op(name, labels, [&](int i, int j) {
        const auto& f = maps[i];
        const auto& g = maps[j];
        std::vector<int> h(f.size());
        for (size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
        return index.at(map_label(h));
    });
}

} // namespace

std::optional<GroupoidTier> tier_from_string(const std::string& s) {
    if (s == "z") return GroupoidTier::Z;
    if (s == "z*") return GroupoidTier::ZStar;
    if (s == "z**") return GroupoidTier::ZStarStar;
    if (s == "z***") return GroupoidTier::ZStarStarStar;
    return std::nullopt;
}

const char* to_string(GroupoidTier t) {
    switch (t) {
        case GroupoidTier::Z: return "z";
        case GroupoidTier::ZStar: return "z*";
        case GroupoidTier::ZStarStar: return "z**";
        case GroupoidTier::ZStarStarStar: return "z***";
    }
    return "?";
}

bool tier_accepts(GroupoidTier tier, int n, int t, int u) {
    if (n < 3) return false;
    if (t < 0 || u < 0 || t >= n || u >= n) return false;
    switch (tier) {
        case GroupoidTier::Z:
            return t != u && t != 0 && u != 0 && gcd_ll(t, u) == 1;
        case GroupoidTier::ZStar: return t != u && t != 0 && u != 0;
        case GroupoidTier::ZStarStar: return t != 0 && u != 0;
        case GroupoidTier::ZStarStarStar: return true;
    }
    return false;
}

Magma cyclic_group(int n) {
    if (n < 1) fail("BadParameters", "cyclic order must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
    return from_op("C" + std::to_string(n), labels,
                   [n](int i, int j) { return (i + j) % n; });
}

Magma zn_add(int n) {
    if (n < 1) fail("BadParameters", "modulus must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_op("Z" + std::to_string(n) + "+", labels,
                   [n](int i, int j) { return (i + j) % n; });
}

Magma zn_mul(int n) {
    if (n < 1) fail("BadParameters", "modulus must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_op("Z" + std::to_string(n) + "*", labels,
                   [n](int i, int j) { return (i * j) % n; });
}

Magma symmetric_group(int n) {
    if (n < 1 || n > 7) fail("BadParameters", "symmetric group degree must be in [1,7]");
    return maps_magma("S" + std::to_string(n), all_permutations(n));
}

Magma alternating_group(int n) {
    if (n < 1 || n > 7) fail("BadParameters", "alternating group degree must be in [1,7]");
    std::vector<std::vector<int>> evens;
    for (auto& p : all_permutations(n))
        if (even_permutation(p)) evens.push_back(p);
    return maps_magma("A" + std::to_string(n), std::move(evens));
}

Magma dihedral_group(int n) {
    if (n < 1) fail("BadParameters", "dihedral parameter must be >= 1");
    // elements a^i b^j with i in {0,1}, j in {0..n-1}; ab = b^-1 a
    std::vector<std::string> labels;
    auto lab = [&](int i, int j) {
        std::string s;
        if (i) s += "a";
        if (j == 1) s += "b";
        else if (j > 1) s += "b" + std::to_string(j);
        return s.empty() ? std::string("1") : s;
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < n; ++j) labels.push_back(lab(i, j));
    auto idx = [n](int i, int j) { return i * n + j; };
    return from_op("D2," + std::to_string(n), labels, [&, n](int x, int y) {
        int i1 = x / n, j1 = x % n, i2 = y / n, j2 = y % n;
        // (a^i1 b^j1)(a^i2 b^j2): push b^j1 past a^i2
        int j = i2 ? mod_floor(j2 - j1, n) : (j1 + j2) % n;
        return idx((i1 + i2) % 2, static_cast<int>(j));
    });
}

Magma symmetric_semigroup(int n) {
    if (n < 1 || n > 5) fail("BadParameters", "symmetric semigroup degree capped at 5");
    std::vector<std::vector<int>> maps;
    std::vector<int> f(n, 0);
    while (true) {
        maps.push_back(f);
        int k = n - 1;
        while (k >= 0 && f[k] == n - 1) f[k--] = 0;
        if (k < 0) break;
        ++f[k];
    }
    return maps_magma("S(" + std::to_string(n) + ")", std::move(maps));
}

Magma new_loop(int n, int m) {
    if (!(n > 3 && n % 2 == 1)) fail("BadParameters", "new_loop needs n odd and > 3");
    if (!(m > 0 && m < n)) fail("BadParameters", "new_loop needs 0 < m < n");
    if (gcd_ll(m, n) != 1) fail("BadParameters", "new_loop needs gcd(m,n) = 1");
    if (gcd_ll(m - 1, n) != 1) fail("BadParameters", "new_loop needs gcd(m-1,n) = 1");
    std::vector<std::string> labels{"e"};
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return from_op("L" + std::to_string(n) + "(" + std::to_string(m) + ")", labels,
                   [n, m](int i, int j) {
                       if (i == 0) return j;
                       if (j == 0) return i;
                       if (i == j) return 0;
                       // residues 1..n with 0 mapped to n
                       long long t = mod_floor(static_cast<long long>(m) * j -
                                                   static_cast<long long>(m - 1) * i,
                                               n);
                       return static_cast<int>(t == 0 ? n : t);
                   });
}

Magma zn_groupoid(int n, int t, int u, GroupoidTier tier) {
    if (!tier_accepts(tier, n, t, u))
        fail("BadParameters", "(t,u) = (" + std::to_string(t) + "," + std::to_string(u) +
                                  ") not admissible for tier " + to_string(tier) + " over Z_" +
                                  std::to_string(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_op("Z" + std::to_string(n) + "(" + std::to_string(t) + "," +
                       std::to_string(u) + ")",
                   labels, [n, t, u](int a, int b) {
                       return static_cast<int>(
                           mod_floor(static_cast<long long>(t) * a +
                                         static_cast<long long>(u) * b,
                                     n));
                   });
}

std::string gl2_label(int a, int b, int c, int d) {
    return std::to_string(a) + std::to_string(b) + "|" + std::to_string(c) +
           std::to_string(d);
}

Magma gl2(int p) {
    if (!is_prime(p)) fail("BadParameters", "gl2 needs a prime modulus");
    if (p > 7) fail("TooLarge", "gl2 capped at p <= 7");
    std::vector<std::array<int, 4>> mats;
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (mod_floor(a * d - b * c, p) != 0) {
                        mats.push_back({a, b, c, d});
                        labels.push_back(gl2_label(a, b, c, d));
                        index[labels.back()] = static_cast<int>(mats.size()) - 1;
                    }
    return from_op("GL2(" + std::to_string(p) + ")", labels, [&, p](int i, int j) {
        const auto& x = mats[i];
        const auto& y = mats[j];
        int a = (x[0] * y[0] + x[1] * y[2]) % p;
        int b = (x[0] * y[1] + x[1] * y[3]) % p;
        int c = (x[2] * y[0] + x[3] * y[2]) % p;
        int d = (x[2] * y[1] + x[3] * y[3]) % p;
        return index.at(gl2_label(a, b, c, d));
    });
}

Magma direct_product(const Magma& a, const Magma& b) {
    std::vector<std::string> labels;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    const int nb = b.size();
    return from_op(a.name() + "x" + b.name(), labels, [&, nb](int x, int y) {
        return a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
    });
}

Magma relabeled(const Magma& m, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(m.labels().size());
    for (const auto& l : m.labels()) labels.push_back(prefix + l);
    return Magma::make(m.name(), std::move(labels), m.table());
}

Magma build_family(const std::string& family, const std::vector<int>& params,
                   const std::string& tier) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            fail("BadParameters", family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "cyclic") { want(1); return cyclic_group(params[0]); }
    if (family == "zn-add") { want(1); return zn_add(params[0]); }
    if (family == "zn-mul") { want(1); return zn_mul(params[0]); }
    if (family == "symmetric") { want(1); return symmetric_group(params[0]); }
    if (family == "alternating") { want(1); return alternating_group(params[0]); }
    if (family == "dihedral") { want(1); return dihedral_group(params[0]); }
    if (family == "symsemi") { want(1); return symmetric_semigroup(params[0]); }
    if (family == "new-loop") { want(2); return new_loop(params[0], params[1]); }
    if (family == "groupoid") {
        want(3);
        auto t = tier_from_string(tier);
        if (!t) fail("BadParameters", "unknown tier '" + tier + "'");
        return zn_groupoid(params[0], params[1], params[2], *t);
    }
    if (family == "gl2") { want(1); return gl2(params[0]); }
    fail("BadParameters", "unknown family '" + family + "'");
}

} // namespace bialg
