#include "bialg/ringlike.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bialg {

RingTable RingTable::make(std::string name, std::vector<std::string> labels,
                          std::vector<int> add, std::vector<int> mul) {
    const size_t n = labels.size();
    if (n == 0) fail("SchemaError", "empty carrier");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) fail("DuplicateLabel", "duplicate label '" + l + "'");
    for (const auto* t : {&add, &mul}) {
        if (t->size() != n * n) fail("SchemaError", "tables must be square over the carrier");
        for (int v : *t)
            if (v < 0 || v >= static_cast<int>(n))
                fail("IndexOutOfRange", "table entry out of range");
    }
    RingTable rt;
    rt.name_ = std::move(name);
    rt.labels_ = std::move(labels);
    rt.add_ = std::move(add);
    rt.mul_ = std::move(mul);
    return rt;
}

int RingTable::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    fail("UnknownLabel", "no element labeled '" + label + "' in " + name_);
}

RingTable RingTable::restrict_to(const std::vector<int>& subset,
                                 const std::string& name) const {
    std::vector<int> pos(labels_.size(), -1);
    for (size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = static_cast<int>(k);
    std::vector<std::string> labs;
    for (int i : subset) labs.push_back(labels_[i]);
    const size_t m = subset.size();
    std::vector<int> a(m * m), mu(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            int va = add(subset[i], subset[j]);
            int vm = mul(subset[i], subset[j]);
            if (pos[va] < 0 || pos[vm] < 0)
                fail("NotClosed", "subset of " + name_ + " is not closed");
            a[i * m + j] = pos[va];
            mu[i * m + j] = pos[vm];
        }
    return RingTable::make(name, std::move(labs), std::move(a), std::move(mu));
}

namespace {

bool table_associative(const RingTable& rt, bool additive) {
    auto op = [&](int i, int j) { return additive ? rt.add(i, j) : rt.mul(i, j); };
    const int n = rt.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return false;
    return true;
}

bool table_commutative(const RingTable& rt, bool additive) {
    auto op = [&](int i, int j) { return additive ? rt.add(i, j) : rt.mul(i, j); };
    for (int a = 0; a < rt.size(); ++a)
        for (int b = a + 1; b < rt.size(); ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

std::optional<int> table_identity(const RingTable& rt, bool additive) {
    auto op = [&](int i, int j) { return additive ? rt.add(i, j) : rt.mul(i, j); };
    for (int e = 0; e < rt.size(); ++e) {
        bool ok = true;
        for (int a = 0; a < rt.size() && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
        if (ok) return e;
    }
    return std::nullopt;
}

bool additive_group(const RingTable& rt, std::optional<int> zero) {
    if (!zero || !table_associative(rt, true)) return false;
    for (int a = 0; a < rt.size(); ++a) {
        bool inv = false;
        for (int b = 0; b < rt.size(); ++b)
            if (rt.add(a, b) == *zero && rt.add(b, a) == *zero) {
                inv = true;
                break;
            }
        if (!inv) return false;
    }
    return true;
}

} // namespace

RingClass classify_ringlike(const RingTable& rt) {
    RingClass rc;
    const int n = rt.size();
    rc.zero = table_identity(rt, true);
    rc.one = table_identity(rt, false);
    rc.add_associative = table_associative(rt, true);
    rc.add_commutative = table_commutative(rt, true);
    rc.add_group = additive_group(rt, rc.zero);
    rc.add_abelian_group = rc.add_group && rc.add_commutative;
    rc.add_commutative_monoid =
        rc.add_associative && rc.add_commutative && rc.zero.has_value();
    rc.mul_semigroup = table_associative(rt, false);
    rc.mul_commutative = table_commutative(rt, false);

    rc.left_distributive = rc.right_distributive = true;
    for (int a = 0; a < n && (rc.left_distributive || rc.right_distributive); ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (rt.mul(a, rt.add(b, c)) != rt.add(rt.mul(a, b), rt.mul(a, c)))
                    rc.left_distributive = false;
                if (rt.mul(rt.add(b, a), c) != rt.add(rt.mul(b, c), rt.mul(a, c)))
                    rc.right_distributive = false;
            }

    rc.strict_addition = true;
    if (rc.zero) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rt.add(a, b) == *rc.zero && (a != *rc.zero || b != *rc.zero))
                    rc.strict_addition = false;
    } else {
        rc.strict_addition = false;
    }

    if (rc.zero) {
        for (int x = 0; x < n; ++x) {
            if (x == *rc.zero) continue;
            for (int y = 0; y < n; ++y) {
                if (y == *rc.zero) continue;
                if (rt.mul(x, y) == *rc.zero || rt.mul(y, x) == *rc.zero) {
                    rc.zero_divisors.push_back(x);
                    break;
                }
            }
        }
    }
    if (rc.one) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rt.mul(x, y) == *rc.one && rt.mul(y, x) == *rc.one) {
                    rc.units.push_back(x);
                    break;
                }
    }
    for (int x = 0; x < n; ++x)
        if (rt.mul(x, x) == x) rc.idempotents.push_back(x);
    if (rc.zero) {
        for (int x = 0; x < n; ++x) {
            if (x == *rc.zero) continue;
            int acc = x;
            for (int k = 1; k <= n; ++k) {
                if (acc == *rc.zero) {
                    rc.nilpotents.push_back(x);
                    break;
                }
                acc = rt.mul(acc, x);
            }
        }
    }

    rc.ring = rc.add_abelian_group && rc.mul_semigroup && rc.left_distributive &&
              rc.right_distributive;
    rc.commutative_ring = rc.ring && rc.mul_commutative;
    rc.ring_with_unit = rc.ring && rc.one.has_value();
    rc.integral_domain = rc.commutative_ring && rc.zero_divisors.empty();
    rc.division_ring = rc.ring && rc.zero_divisors.empty();
    // field: (R \ {0}, *) a commutative group
    rc.field = false;
    if (rc.ring && rc.mul_commutative && rc.one && rc.zero && *rc.one != *rc.zero &&
        rc.zero_divisors.empty()) {
        bool inverses = true;
        for (int x = 0; x < n && inverses; ++x) {
            if (x == *rc.zero) continue;
            bool found = false;
            for (int y = 0; y < n; ++y)
                if (y != *rc.zero && rt.mul(x, y) == *rc.one) {
                    found = true;
                    break;
                }
            inverses = found;
        }
        rc.field = inverses;
    }
    rc.semiring = rc.add_commutative_monoid && rc.mul_semigroup && rc.left_distributive &&
                  rc.right_distributive;
    rc.semifield = rc.semiring && rc.mul_commutative && rc.one.has_value() &&
                   rc.strict_addition && rc.zero_divisors.empty();
    rc.right_near_ring = rc.add_group && rc.mul_semigroup && rc.right_distributive;
    if (rc.right_near_ring && rc.zero && n > 1) {
        // (N \ {0}, *) a group
        bool grp = rc.one.has_value();
        if (grp)
            for (int x = 0; x < n && grp; ++x) {
                if (x == *rc.zero) continue;
                bool found = false;
                for (int y = 0; y < n; ++y)
                    if (y != *rc.zero && rt.mul(x, y) == *rc.one && rt.mul(y, x) == *rc.one)
                        found = true;
                grp = found;
            }
        rc.near_field = grp && rc.zero_divisors.empty();
    }
    return rc;
}

namespace {

bool both_closed(const RingTable& rt, const std::vector<int>& subset) {
    std::vector<char> in(rt.size(), 0);
    for (int i : subset) in[i] = 1;
    for (int a : subset)
        for (int b : subset)
            if (!in[rt.add(a, b)] || !in[rt.mul(a, b)]) return false;
    return true;
}

} // namespace

SRingDetection s_ring_detect(const RingTable& rt) {
    SRingDetection det;
    const int n = rt.size();
    auto consider = [&](const std::vector<int>& subset) {
        if (subset.empty() || static_cast<int>(subset.size()) == n) return;
        if (!both_closed(rt, subset)) return;
        auto sub = rt.restrict_to(subset, "w");
        auto rc = classify_ringlike(sub);
        SRingWitness w;
        w.elems = subset;
        w.field = rc.field;
        // level II per the defining clauses: abelian additive group, closed
        // multiplication, products vanish only against zero
        w.domain = rc.add_abelian_group && rc.mul_semigroup && rc.zero_divisors.empty() &&
                   subset.size() >= 2;
        if (rc.one) w.unit = subset[*rc.one];
        if (w.field || w.domain) {
            det.witnesses.push_back(w);
            det.s_ring_1 = det.s_ring_1 || w.field;
            det.s_ring_2 = det.s_ring_2 || w.domain;
        }
    };
    if (n <= 12) {
        for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            consider(subset);
        }
    } else {
        // idempotent-seeded closure above the cap
        for (int e = 0; e < n; ++e) {
            if (rt.mul(e, e) != e) continue;
            for (int x = 0; x < n; ++x) {
                std::set<int> s{e, x};
                bool grew = true;
                while (grew && s.size() <= 16) {
                    grew = false;
                    std::vector<int> cur(s.begin(), s.end());
                    for (int a : cur)
                        for (int b : cur) {
                            if (s.insert(rt.add(a, b)).second) grew = true;
                            if (s.insert(rt.mul(a, b)).second) grew = true;
                        }
                }
                if (s.size() <= 16) consider({s.begin(), s.end()});
            }
        }
    }
    return det;
}

SElements s_elements(const RingTable& rt) {
    SElements out;
    const int n = rt.size();
    auto rc_zero = table_identity(rt, true);
    auto rc_one = table_identity(rt, false);

    if (rc_one) {
        const int one = *rc_one;
        for (int x = 0; x < n; ++x) {
            if (x == one) continue;
            for (int y = 0; y < n; ++y) {
                if (rt.mul(x, y) != one) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == x || a == y || a == one) continue;
                    for (int b = 0; b < n; ++b) {
                        if (b == x || b == y || b == one) continue;
                        if (rt.mul(a, b) != one) continue;
                        bool link = rt.mul(x, a) == y || rt.mul(a, x) == y ||
                                    rt.mul(y, b) == x || rt.mul(b, y) == x;
                        if (link) {
                            out.s_units.push_back({x, y, a, b});
                            goto next_unit;
                        }
                    }
                }
            }
        next_unit:;
        }
    }

    if (rc_zero) {
        const int zero = *rc_zero;
        for (int x = 0; x < n; ++x) {
            if (x == zero) continue;
            for (int y = 0; y < n; ++y) {
                if (y == zero || rt.mul(x, y) != zero) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == zero || a == x || a == y) continue;
                    if (!(rt.mul(x, a) == zero || rt.mul(a, x) == zero)) continue;
                    for (int b = 0; b < n; ++b) {
                        if (b == zero || b == x || b == y) continue;
                        if (!(rt.mul(y, b) == zero || rt.mul(b, y) == zero)) continue;
                        if (rt.mul(a, b) != zero || rt.mul(b, a) != zero) {
                            out.s_zero_divisors.push_back({x, y, a, b});
                            goto next_zd;
                        }
                    }
                }
            }
        next_zd:;
        }

        for (int x = 0; x < n; ++x) {
            if (x == zero || rt.mul(x, x) != x) continue;
            for (int a = 0; a < n; ++a) {
                if (a == x || a == zero) continue;
                if (rc_one && a == *rc_one) continue;
                if (rt.mul(a, a) != x) continue;
                if (rt.mul(x, a) == a || rt.mul(a, x) == a || rt.mul(x, a) == x ||
                    rt.mul(a, x) == x) {
                    out.s_idempotents.push_back({x, a});
                    break;
                }
            }
        }

        for (int x = 0; x < n; ++x) {
            if (x == zero) continue;
            for (int y = 0; y < n; ++y) {
                if (y == zero || rt.mul(x, y) == zero) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == zero || a == x || a == y) continue;
                    if (!(rt.mul(a, x) != zero || rt.mul(x, a) != zero)) continue;
                    for (int b = 0; b < n; ++b) {
                        if (b == zero || b == x || b == y) continue;
                        if (!(rt.mul(b, y) != zero || rt.mul(y, b) != zero)) continue;
                        if (rt.mul(a, b) == zero || rt.mul(b, a) == zero) {
                            out.s_anti_zero_divisors.push_back({x, y, a, b});
                            goto next_azd;
                        }
                    }
                }
            }
        next_azd:;
        }
    }
    return out;
}

IfpReport ifp_check(const RingTable& rt) {
    IfpReport rep;
    auto zero = table_identity(rt, true);
    if (!zero) fail("NoZero", rt.name() + " has no additive identity");
    const int n = rt.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (rt.mul(a, b) != *zero) continue;
            for (int x = 0; x < n; ++x)
                if (rt.mul(rt.mul(a, x), b) != *zero) {
                    rep.holds = false;
                    rep.witness = {a, x, b};
                    return rep;
                }
        }
    return rep;
}

BiRingLike assemble_ringlike_union(std::vector<RingTable> components,
                                   std::vector<std::string> sharing) {
    if (components.size() != 2 && components.size() != 4)
        fail("SchemaError", "a ringlike union has 2 or 4 components");
    for (size_t i = 0; i < components.size(); ++i)
        for (size_t j = 0; j < components.size(); ++j) {
            if (i == j) continue;
            const auto& a = components[i].labels();
            const auto& b = components[j].labels();
            bool contained = true;
            for (const auto& l : a)
                if (std::find(b.begin(), b.end(), l) == b.end()) {
                    contained = false;
                    break;
                }
            if (contained) fail("NestedSupports", "supports must be incomparable");
        }
    std::set<std::string> share(sharing.begin(), sharing.end());
    std::map<std::string, int> count;
    std::vector<std::string> universe;
    for (const auto& c : components)
        for (const auto& l : c.labels())
            if (++count[l] == 1) universe.push_back(l);
    for (const auto& [l, k] : count)
        if (k > 1 && !share.count(l))
            fail("UndeclaredSharing", "label '" + l + "' appears in several supports");

    BiRingLike u;
    u.universe = std::move(universe);
    u.sharing = std::move(sharing);
    std::vector<RingClass> rc;
    for (auto& c : components) {
        rc.push_back(classify_ringlike(c));
        u.components.push_back(std::move(c));
    }

    auto all = [&](auto&& f) {
        for (const auto& r : rc)
            if (!f(r)) return false;
        return true;
    };
    u.all_rings = all([](const RingClass& r) { return r.ring; });
    u.all_fields = all([](const RingClass& r) { return r.field; });
    u.all_domains = all([](const RingClass& r) { return r.integral_domain; });
    u.all_division = all([](const RingClass& r) { return r.division_ring; });
    u.all_semirings = all([](const RingClass& r) { return r.semiring; });
    u.all_semifields = all([](const RingClass& r) { return r.semifield; });
    u.all_near_rings = all([](const RingClass& r) { return r.right_near_ring; });

    if (u.components.size() == 4) {
        u.quad_ring = u.all_rings;
        u.quad_domain = u.all_domains;
        u.quad_field = u.all_fields;
        u.kind = u.quad_field ? "quad-field"
                 : u.quad_domain ? "quad-domain"
                 : u.quad_ring ? "quad-ring"
                               : "invalid";
        return u;
    }

    u.biring = u.all_rings;
    u.bifield = u.all_fields;
    u.bidomain = u.all_domains;
    u.bidivision = u.all_division;
    u.bisemiring = u.all_semirings;
    u.bisemifield = u.all_semifields;
    u.binear_ring = u.all_near_rings;
    auto pattern = [&](auto p, auto q) {
        return (p(rc[0]) && q(rc[1])) || (p(rc[1]) && q(rc[0]));
    };
    auto is_ring = [](const RingClass& r) { return r.ring; };
    auto nr_not_ring = [](const RingClass& r) { return r.right_near_ring && !r.ring; };
    auto sr_not_ring = [](const RingClass& r) { return r.semiring && !r.ring; };
    u.biquasi_ring = pattern(is_ring, nr_not_ring);
    u.biquasi_semiring = pattern(is_ring, sr_not_ring);
    u.biquasi_near_ring = pattern(sr_not_ring, nr_not_ring);

    u.kind = u.bifield ? "bifield"
             : u.bidomain ? "bidomain"
             : u.bidivision ? "bidivision-ring"
             : u.biring ? "biring"
             : u.bisemifield ? "bisemifield"
             : u.biquasi_ring ? "biquasi-ring"
             : u.biquasi_semiring ? "biquasi-semiring"
             : u.bisemiring ? "bisemiring"
             : u.biquasi_near_ring ? "biquasi-near-ring"
             : u.binear_ring ? "binear-ring"
                             : "invalid";
    return u;
}

const char* to_string(Reducibility r) {
    return r == Reducibility::reducible ? "reducible" : "irreducible";
}

const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::reducible: return "reducible";
        case Trichotomy::irreducible: return "irreducible";
        case Trichotomy::neither: return "neither";
    }
    return "?";
}

namespace {

std::vector<int> trim(std::vector<int> c, int p) {
    for (auto& v : c) v = static_cast<int>(mod_floor(v, p));
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<int>(mod_floor(out[i + j] + a[i] * b[j], p));
    return out;
}

// all monic polynomials of exact degree d over Z_p
void for_each_monic(int p, int d, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(d + 1, 0);
    c[d] = 1;
    std::function<void(int)> rec = [&](int i) {
        if (i == d) {
            f(c);
            return;
        }
        for (int v = 0; v < p; ++v) {
            c[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace

Reducibility poly_reducibility(const PolyOverZp& poly, int degree_cap) {
    if (!is_prime(poly.p)) fail("BadParameters", "modulus must be prime");
    auto c = trim(poly.coeffs, poly.p);
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg > degree_cap) fail("CapExceeded", "degree above cap");
    if (deg < 1) fail("BadParameters", "constant polynomials have no factorization verdict");
    if (deg == 1) return Reducibility::irreducible;
    // normalize to monic
    int lead = c.back();
    int inv = 0;
    for (int v = 1; v < poly.p; ++v)
        if (mod_floor(v * lead, poly.p) == 1) inv = v;
    for (auto& v : c) v = static_cast<int>(mod_floor(v * inv, poly.p));

    for (int d1 = 1; d1 <= deg / 2; ++d1) {
        bool found = false;
        for_each_monic(poly.p, d1, [&](const std::vector<int>& g) {
            if (found) return;
            for_each_monic(poly.p, deg - d1, [&](const std::vector<int>& h) {
                if (found) return;
                if (trim(poly_mul(g, h, poly.p), poly.p) == c) found = true;
            });
        });
        if (found) return Reducibility::reducible;
    }
    return Reducibility::irreducible;
}

Trichotomy biring_trichotomy(const std::vector<int>& coeffs, int p, int q, int degree_cap) {
    auto a = poly_reducibility({p, coeffs}, degree_cap);
    auto b = poly_reducibility({q, coeffs}, degree_cap);
    if (a == Reducibility::reducible && b == Reducibility::reducible)
        return Trichotomy::reducible;
    if (a == Reducibility::irreducible && b == Reducibility::irreducible)
        return Trichotomy::irreducible;
    return Trichotomy::neither;
}

std::vector<std::vector<int>> enumerate_ideals(const RingTable& rt, int cap) {
    const int n = rt.size();
    if (n > cap) fail("CapExceeded", "ideal enumeration capped at " + std::to_string(cap));
    auto zero = table_identity(rt, true);
    if (!zero) fail("NoZero", rt.name() + " has no additive identity");
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << *zero))) continue;
        std::vector<int> subset;
        std::vector<char> in(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                subset.push_back(i);
                in[i] = 1;
            }
        bool ok = true;
        for (int a : subset) {
            for (int b : subset)
                if (!in[rt.add(a, b)]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            for (int r = 0; r < n; ++r)
                if (!in[rt.mul(a, r)] || !in[rt.mul(r, a)]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        // additive inverses inside
        if (ok) {
            for (int a : subset) {
                bool inv = false;
                for (int b : subset)
                    if (rt.add(a, b) == *zero) inv = true;
                if (!inv) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(subset);
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_bi_ideals(const BiRingLike& u,
                                                               int cap) {
    std::vector<std::vector<std::vector<int>>> per;
    for (const auto& c : u.components) per.push_back(enumerate_ideals(c, cap));
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<size_t> idx(per.size(), 0);
    while (true) {
        std::vector<std::vector<int>> tuple;
        for (size_t i = 0; i < per.size(); ++i) tuple.push_back(per[i][idx[i]]);
        out.push_back(std::move(tuple));
        size_t k = 0;
        while (k < per.size() && ++idx[k] == per[k].size()) idx[k++] = 0;
        if (k == per.size()) break;
    }
    return out;
}

RingTable chain_lattice(int n) {
    if (n < 2) fail("BadParameters", "chain lattice needs at least 0 < 1");
    std::vector<std::string> labels{"0"};
    for (int i = 1; i + 1 < n; ++i) labels.push_back("a" + std::to_string(i));
    labels.push_back("1");
    const size_t m = labels.size();
    std::vector<int> add(m * m), mul(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            add[i * m + j] = static_cast<int>(std::max(i, j)); // join
            mul[i * m + j] = static_cast<int>(std::min(i, j)); // meet
        }
    return RingTable::make("C" + std::to_string(n), std::move(labels), std::move(add),
                           std::move(mul));
}

RingTable zn_ring(int n) {
    if (n < 1) fail("BadParameters", "modulus must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            add[static_cast<size_t>(i) * n + j] = (i + j) % n;
            mul[static_cast<size_t>(i) * n + j] = (i * j) % n;
        }
    return RingTable::make("Z" + std::to_string(n), std::move(labels), std::move(add),
                           std::move(mul));
}

RingTable zn_subring(int n, const std::vector<int>& subset, const std::string& name) {
    auto full = zn_ring(n);
    return full.restrict_to(subset, name);
}

RingTable ringtable_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("add") ||
        !doc.contains("mul"))
        fail("SchemaError", "two-op document needs 'elements', 'add' and 'mul'");
    std::vector<std::string> labels;
    for (const auto& l : doc["elements"]) labels.push_back(l.get<std::string>());
    auto read = [&](const char* key) {
        std::vector<int> t;
        if (doc[key].size() != labels.size()) fail("SchemaError", "ragged table");
        for (const auto& row : doc[key]) {
            if (row.size() != labels.size()) fail("SchemaError", "ragged table row");
            for (const auto& v : row) t.push_back(v.get<int>());
        }
        return t;
    };
    return RingTable::make(doc.value("name", "ringtable"), labels, read("add"), read("mul"));
}

nlohmann::json ringtable_to_json(const RingTable& rt) {
    nlohmann::json doc;
    doc["name"] = rt.name();
    doc["elements"] = rt.labels();
    auto dump = [&](bool additive) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < rt.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < rt.size(); ++j)
                row.push_back(additive ? rt.add(i, j) : rt.mul(i, j));
            rows.push_back(row);
        }
        return rows;
    };
    doc["add"] = dump(true);
    doc["mul"] = dump(false);
    return doc;
}

nlohmann::json ringclass_to_json(const RingTable& rt, const RingClass& rc) {
    nlohmann::json j;
    j["name"] = rt.name();
    if (rc.zero) j["zero"] = rt.label(*rc.zero);
    if (rc.one) j["one"] = rt.label(*rc.one);
    j["flags"] = {{"add_abelian_group", rc.add_abelian_group},
                  {"add_commutative_monoid", rc.add_commutative_monoid},
                  {"mul_semigroup", rc.mul_semigroup},
                  {"left_distributive", rc.left_distributive},
                  {"right_distributive", rc.right_distributive}};
    j["derived"] = {{"ring", rc.ring},
                    {"commutative_ring", rc.commutative_ring},
                    {"field", rc.field},
                    {"integral_domain", rc.integral_domain},
                    {"semiring", rc.semiring},
                    {"semifield", rc.semifield},
                    {"right_near_ring", rc.right_near_ring},
                    {"near_field", rc.near_field}};
    auto labs = [&](const std::vector<int>& xs) {
        nlohmann::json a = nlohmann::json::array();
        for (int x : xs) a.push_back(rt.label(x));
        return a;
    };
    j["zero_divisors"] = labs(rc.zero_divisors);
    j["units"] = labs(rc.units);
    j["idempotents"] = labs(rc.idempotents);
    j["nilpotents"] = labs(rc.nilpotents);
    return j;
}

} // namespace bialg
