#include "bialg/smarandache.hpp"

#include <algorithm>
#include <map>

namespace bialg {

std::optional<STarget> starget_from_string(const std::string& s) {
    if (s == "group-in-semigroup") return STarget::group_in_semigroup;
    if (s == "semigroup-in-groupoid") return STarget::semigroup_in_groupoid;
    if (s == "group-in-loop") return STarget::group_in_loop;
    return std::nullopt;
}

const char* to_string(STarget t) {
    switch (t) {
        case STarget::group_in_semigroup: return "group-in-semigroup";
        case STarget::semigroup_in_groupoid: return "semigroup-in-groupoid";
        case STarget::group_in_loop: return "group-in-loop";
    }
    return "?";
}

std::vector<int> idempotents(const Magma& m) {
    std::vector<int> out;
    for (int x = 0; x < m.size(); ++x)
        if (m.op(x, x) == x) out.push_back(x);
    return out;
}

std::vector<int> maximal_subgroup_at(const Magma& m, int e) {
    std::vector<int> out;
    for (int x = 0; x < m.size(); ++x) {
        if (m.op(e, x) != x || m.op(x, e) != x) continue;
        bool invertible = false;
        for (int y = 0; y < m.size(); ++y)
            if (m.op(x, y) == e && m.op(y, x) == e) {
                invertible = true;
                break;
            }
        if (invertible) out.push_back(x);
    }
    return out;
}

namespace {

bool proper(const Magma& m, const std::vector<int>& subset) {
    return !subset.empty() && static_cast<int>(subset.size()) < m.size();
}

SWitness witness_of(const Magma& m, std::vector<int> elems, bool maximal) {
    Magma sub = m.restrict_to(elems, "witness");
    auto r = classify(sub);
    SWitness w;
    w.elems = std::move(elems);
    w.kind = r.kind;
    w.maximal = maximal;
    if (r.identity) w.identity = w.elems[*r.identity];
    return w;
}

// Subgroups of a witness group, found through generated closures (every
// subgroup of a cyclic group is one-generated, so nothing is lost there).
std::vector<std::vector<int>> subgroups_within(const Magma& m, const std::vector<int>& grp) {
    Magma sub = m.restrict_to(grp, "witness");
    auto subs = enumerate_subalgebras(sub, SubKind::subgroup);
    std::vector<std::vector<int>> out;
    for (const auto& s : subs.sets) {
        std::vector<int> mapped;
        for (int i : s) mapped.push_back(grp[i]);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    return out;
}

} // namespace

SDetection s_detect(const Magma& m, STarget target, bool nontrivial_only) {
    SDetection det;
    det.target = to_string(target);
    auto base = classify(m);

    std::set<std::vector<int>> seen;
    auto push = [&](std::vector<int> elems, bool maximal) {
        std::sort(elems.begin(), elems.end());
        if (!proper(m, elems)) return;
        if (nontrivial_only && elems.size() < 2) return;
        if (!seen.insert(elems).second) return;
        det.witnesses.push_back(witness_of(m, std::move(elems), maximal));
    };

    switch (target) {
        case STarget::group_in_semigroup: {
            if (!base.associative || is_group(base))
                fail("WrongBaseKind", m.name() + " is not a semigroup-not-group");
            for (int e : idempotents(m)) {
                auto grp = maximal_subgroup_at(m, e);
                if (grp.empty()) continue;
                push(grp, true);
                for (auto& s : subgroups_within(m, grp)) push(std::move(s), false);
            }
            break;
        }
        case STarget::semigroup_in_groupoid: {
            if (base.associative)
                fail("WrongBaseKind", m.name() + " is already associative");
            if (m.size() <= 12) {
                auto subs = enumerate_subalgebras(m, SubKind::subsemigroup);
                for (auto& s : subs.sets) push(std::move(s), false);
            } else {
                for (int x : idempotents(m)) push({x}, false);
                for (int a = 0; a < m.size(); ++a) {
                    auto cl = closure(m, {a});
                    if (proper(m, cl) && classify(m.restrict_to(cl, "c")).associative)
                        push(std::move(cl), false);
                }
            }
            break;
        }
        case STarget::group_in_loop: {
            if (!(base.latin && base.identity) || base.associative)
                fail("WrongBaseKind", m.name() + " is not a proper loop");
            auto subs = enumerate_subalgebras(m, SubKind::subgroup, 1 << 20, false);
            for (auto& s : subs.sets) push(std::move(s), false);
            break;
        }
    }
    det.smarandache = !det.witnesses.empty();
    return det;
}

namespace {

// Group-forming subsets of a component: subgroups when the component is a
// group or loop, maximal idempotent-anchored subgroups (and their subgroups)
// when it is a plain semigroup.
std::vector<std::vector<int>> group_witnesses(const Magma& m) {
    auto r = classify(m);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    auto push = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        if (s.empty()) return;
        if (seen.insert(s).second) out.push_back(std::move(s));
    };
    if (r.latin && r.identity) {
        for (auto& s : enumerate_subalgebras(m, SubKind::subgroup).sets) push(std::move(s));
    } else if (r.associative) {
        for (int e : idempotents(m)) {
            auto grp = maximal_subgroup_at(m, e);
            if (grp.empty()) continue;
            push(grp);
            for (auto& s : subgroups_within(m, grp)) push(std::move(s));
        }
    }
    return out;
}

bool has_nontrivial(const std::vector<std::vector<int>>& sets) {
    return std::any_of(sets.begin(), sets.end(), [](const auto& s) { return s.size() > 1; });
}

// Proper associative closed subsets of a groupoid (S-groupoid witnesses).
std::vector<std::vector<int>> semigroup_witnesses(const Magma& m) {
    std::vector<std::vector<int>> out;
    if (m.size() <= 12) {
        for (auto& s : enumerate_subalgebras(m, SubKind::subsemigroup).sets)
            if (static_cast<int>(s.size()) < m.size()) out.push_back(s);
    } else {
        for (int a = 0; a < m.size(); ++a) {
            auto cl = closure(m, {a});
            if (static_cast<int>(cl.size()) < m.size() &&
                classify(m.restrict_to(cl, "c")).associative)
                out.push_back(cl);
        }
    }
    return out;
}

} // namespace

SBiDetection s_bi_detect(const BiStructure& bs) {
    SBiDetection det;
    det.base = classify_bi(bs);
    if (bs.arity() != 2) return det;

    std::vector<ClassificationReport> r{classify(bs.part(0)), classify(bs.part(1))};
    auto push_pair = [&](std::vector<int> p0, std::vector<int> p1) {
        det.witnesses.push_back(make_sub(bs, {std::move(p0), std::move(p1)}));
    };

    auto bigroup_subset_witnesses = [&]() {
        // proper subsets P = P_1 u P_2 with both parts groups and at least
        // one nontrivial (all-idempotent structures stay non-Smarandache)
        auto w0 = group_witnesses(bs.part(0));
        auto w1 = group_witnesses(bs.part(1));
        bool found = false;
        for (const auto& a : w0)
            for (const auto& b : w1) {
                if (a.size() < 2 && b.size() < 2) continue;
                if (static_cast<int>(a.size()) == bs.part(0).size() &&
                    static_cast<int>(b.size()) == bs.part(1).size())
                    continue; // not a proper subset
                push_pair(a, b);
                found = true;
            }
        return found;
    };

    switch (det.base) {
        case BiKind::bigroup: {
            // already a bigroup; the S-bigroup pattern wants (group, S-semigroup)
            det.s_kind = "";
            break;
        }
        case BiKind::biquasi_group:
        case BiKind::bisemigroupII: {
            // (group, S-semigroup) makes the union an S-bigroup
            int g = -1, s = -1;
            for (int i = 0; i < 2; ++i)
                (is_group(r[i]) ? g : s) = i;
            if (g >= 0 && s >= 0) {
                auto w = group_witnesses(bs.part(s));
                if (has_nontrivial(w)) {
                    det.s_kind = "S-bigroup";
                    det.smarandache = true;
                    std::vector<int> whole(bs.part(g).size());
                    for (int i = 0; i < bs.part(g).size(); ++i) whole[i] = i;
                    for (const auto& b : w) {
                        if (b.size() < 2) continue;
                        if (g == 0) push_pair(whole, b);
                        else push_pair(b, whole);
                    }
                    break;
                }
            }
            if (det.base == BiKind::bisemigroupII && bigroup_subset_witnesses()) {
                det.s_kind = "S-bisemigroup";
                det.smarandache = true;
            }
            break;
        }
        case BiKind::biloop: {
            if (bigroup_subset_witnesses()) {
                det.s_kind = "S-biloop";
                det.smarandache = true;
            }
            break;
        }
        case BiKind::bigroupoid:
        case BiKind::biquasi_loop:
        case BiKind::biquasi_groupoid: {
            // (S-groupoid, S-semigroup)
            int gp = -1, sg = -1;
            for (int i = 0; i < 2; ++i)
                (!r[i].associative ? gp : sg) = i;
            if (gp < 0 || sg < 0) break;
            auto sgw = semigroup_witnesses(bs.part(gp));
            auto grw = group_witnesses(bs.part(sg));
            if (!sgw.empty() && has_nontrivial(grw)) {
                det.s_kind = "S-bigroupoid";
                det.smarandache = true;
                for (const auto& a : sgw)
                    for (const auto& b : grw) {
                        if (b.size() < 2) continue;
                        if (gp == 0) push_pair(a, b);
                        else push_pair(b, a);
                    }
            }
            break;
        }
        default: break;
    }
    return det;
}

SCauchyReport s_cauchy(const BiStructure& bs) {
    SCauchyReport rep;
    const int total = bs.order();
    for (int c = 0; c < bs.arity(); ++c) {
        const auto& m = bs.part(c);
        auto e = m.identity();
        if (!e) continue;
        for (int x = 0; x < m.size(); ++x) {
            if (x == *e) continue; // n > 1 required
            auto k = element_order(m, x);
            if (!k || *k <= 1) continue;
            if (total % *k == 0) rep.s_special_cauchy.push_back({c, x, *k});
            // proper divisor of the component order (an element of order equal
            // to its whole component is not counted)
            if (m.size() % *k == 0 && *k < m.size()) rep.s_cauchy.push_back({c, x, *k});
        }
    }
    return rep;
}

std::optional<SProperty> sproperty_from_string(const std::string& s) {
    if (s == "commutative") return SProperty::commutative;
    if (s == "cyclic") return SProperty::cyclic;
    if (s == "lagrange") return SProperty::lagrange;
    if (s == "hyper") return SProperty::hyper;
    if (s == "simple") return SProperty::simple;
    return std::nullopt;
}

namespace {

bool group_commutative(const Magma& m, const std::vector<int>& s) {
    for (int a : s)
        for (int b : s)
            if (m.op(a, b) != m.op(b, a)) return false;
    return true;
}

bool group_cyclic(const Magma& m, const std::vector<int>& s) {
    std::set<int> want(s.begin(), s.end());
    for (int g : s) {
        std::set<int> gen;
        int acc = g;
        for (size_t i = 0; i < s.size() + 1; ++i) {
            gen.insert(acc);
            acc = m.op(acc, g);
        }
        if (gen == want) return true;
    }
    return false;
}

} // namespace

SGradeReport s_grade(const BiStructure& bs, SProperty prop) {
    SGradeReport rep;
    if (bs.arity() != 2) fail("SchemaError", "s_grade expects two components");
    std::vector<ClassificationReport> r{classify(bs.part(0)), classify(bs.part(1))};
    // locate the (group, semigroup) split
    int g = -1;
    for (int i = 0; i < 2; ++i)
        if (is_group(r[i]) && g < 0) g = i;
    if (g < 0) fail("WrongBaseKind", "no group component");
    const int s = (g == 0) ? 1 : 0;

    auto witnesses = group_witnesses(bs.part(s));
    std::vector<std::vector<int>> graded;
    for (auto& w : witnesses)
        if (w.size() > 1) graded.push_back(w);

    switch (prop) {
        case SProperty::commutative: {
            rep.property = "commutative";
            bool gcomm = r[g].commutative;
            bool all = gcomm, any = false;
            for (const auto& w : graded) {
                bool c = group_commutative(bs.part(s), w);
                all = all && c;
                any = any || c;
            }
            rep.strong = all && !graded.empty();
            rep.weak = any;
            break;
        }
        case SProperty::cyclic: {
            rep.property = "cyclic";
            std::vector<int> whole(bs.part(g).size());
            for (int i = 0; i < bs.part(g).size(); ++i) whole[i] = i;
            bool gcyc = group_cyclic(bs.part(g), whole);
            bool all = gcyc, any = false;
            for (const auto& w : graded) {
                bool c = group_cyclic(bs.part(s), w);
                all = all && c;
                any = any || c;
            }
            rep.strong = all && !graded.empty();
            rep.weak = any;
            break;
        }
        case SProperty::lagrange: {
            rep.property = "lagrange";
            // candidate S-sub-bigroups: (subgroup of the group part, witness)
            auto gs = enumerate_subalgebras(bs.part(g), SubKind::subgroup).sets;
            bool all = true, any = false, seen = false;
            for (const auto& h1 : gs)
                for (const auto& h2 : witnesses) {
                    if (h1.size() == 1 && h2.size() == 1) continue;
                    std::vector<std::vector<int>> parts(2);
                    parts[g] = h1;
                    parts[s] = h2;
                    auto sub = make_sub(bs, parts);
                    if (sub.order >= bs.order()) continue;
                    seen = true;
                    bool div = bs.order() % sub.order == 0;
                    all = all && div;
                    any = any || div;
                }
            rep.s_lagrange = seen && all;
            rep.s_weakly_lagrange = any;
            rep.s_non_lagrange = seen && !any;
            rep.strong = rep.s_lagrange;
            rep.weak = rep.s_weakly_lagrange;
            break;
        }
        case SProperty::hyper:
        case SProperty::simple: {
            rep.property = prop == SProperty::hyper ? "hyper" : "simple";
            // hyper: the group part has no proper nontrivial subgroup, and we
            // adjoin the largest group witness in the semigroup part
            auto gs = enumerate_subalgebras(bs.part(g), SubKind::subgroup).sets;
            bool no_proper = true;
            for (const auto& h : gs)
                if (h.size() > 1 && static_cast<int>(h.size()) < bs.part(g).size())
                    no_proper = false;
            const std::vector<int>* largest = nullptr;
            for (const auto& w : witnesses)
                if (!largest || w.size() > largest->size()) largest = &w;
            if (no_proper && largest && largest->size() > 1) {
                std::vector<int> whole(bs.part(g).size());
                for (int i = 0; i < bs.part(g).size(); ++i) whole[i] = i;
                std::vector<std::vector<int>> parts(2);
                parts[g] = whole;
                parts[s] = *largest;
                rep.hyper = make_sub(bs, parts);
            }
            rep.simple = !rep.hyper.has_value();
            rep.strong = rep.hyper.has_value();
            rep.weak = rep.strong;
            break;
        }
    }
    return rep;
}

SGradeReport s_grade_magma(const Magma& m, SProperty prop) {
    SGradeReport rep;
    auto witnesses = group_witnesses(m);
    std::vector<std::vector<int>> graded;
    for (auto& w : witnesses)
        if (w.size() > 1 && static_cast<int>(w.size()) < m.size()) graded.push_back(w);

    switch (prop) {
        case SProperty::commutative:
        case SProperty::cyclic: {
            rep.property = prop == SProperty::commutative ? "commutative" : "cyclic";
            bool all = true, any = false;
            for (const auto& w : graded) {
                bool ok = prop == SProperty::commutative ? group_commutative(m, w)
                                                         : group_cyclic(m, w);
                all = all && ok;
                any = any || ok;
            }
            rep.strong = all && !graded.empty();
            rep.weak = any;
            break;
        }
        case SProperty::lagrange: {
            rep.property = "lagrange";
            bool all = true, any = false;
            for (const auto& w : graded) {
                bool div = m.size() % static_cast<int>(w.size()) == 0;
                all = all && div;
                any = any || div;
            }
            rep.s_lagrange = all && !graded.empty();
            rep.s_weakly_lagrange = any;
            rep.s_non_lagrange = !graded.empty() && !any;
            rep.strong = rep.s_lagrange;
            rep.weak = rep.s_weakly_lagrange;
            break;
        }
        case SProperty::hyper:
        case SProperty::simple: {
            rep.property = prop == SProperty::hyper ? "hyper" : "simple";
            // a proper closed subset strictly containing a largest witness
            const std::vector<int>* largest = nullptr;
            for (const auto& w : graded)
                if (!largest || w.size() > largest->size()) largest = &w;
            bool hyper = false;
            if (largest) {
                std::set<int> a(largest->begin(), largest->end());
                for (int x = 0; x < m.size() && !hyper; ++x) {
                    if (a.count(x)) continue;
                    std::vector<int> seed(largest->begin(), largest->end());
                    seed.push_back(x);
                    auto cl = closure(m, seed);
                    if (static_cast<int>(cl.size()) < m.size() &&
                        classify(m.restrict_to(cl, "x")).associative)
                        hyper = true;
                }
            }
            rep.strong = rep.weak = hyper;
            rep.simple = !hyper;
            break;
        }
    }
    return rep;
}

SBisetReport s_biset(const std::vector<long long>& a1, const std::vector<long long>& a2,
                     const std::vector<ModularOp>& candidates) {
    // biset condition first
    auto subset_of = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        for (long long x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        return true;
    };
    if (subset_of(a1, a2) || subset_of(a2, a1))
        fail("NotABiset", "the split is not incomparable");

    auto closed_subset = [&](const std::vector<long long>& side, const ModularOp& op,
                             std::vector<long long>& witness) {
        if (op.modulus <= 0) return false;
        const size_t n = side.size();
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (mask == (1u << n) - 1) continue; // proper subsets only
            std::vector<long long> sub;
            std::set<long long> in;
            for (size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    sub.push_back(side[i]);
                    in.insert(mod_floor(side[i], op.modulus));
                }
            bool closed = true;
            for (long long x : sub) {
                for (long long y : sub) {
                    long long v = op.multiply
                                      ? mod_floor(mod_floor(x, op.modulus) *
                                                      mod_floor(y, op.modulus),
                                                  op.modulus)
                                      : mod_floor(x + y, op.modulus);
                    if (!in.count(v)) {
                        closed = false;
                        break;
                    }
                }
                if (!closed) break;
            }
            if (closed) {
                witness = sub;
                return true;
            }
        }
        return false;
    };

    SBisetReport rep;
    bool ok1 = false, ok2 = false;
    for (const auto& op : candidates) {
        if (!ok1 && closed_subset(a1, op, rep.witness1)) {
            ok1 = true;
            rep.op1 = op;
        }
        if (!ok2 && closed_subset(a2, op, rep.witness2)) {
            ok2 = true;
            rep.op2 = op;
        }
    }
    rep.s_biset = ok1 && ok2;
    return rep;
}

std::vector<SInversePair> s_inverse_pairs(const Magma& m, int max_pairs) {
    auto e = m.identity();
    if (!e) fail("NoIdentity", m.name() + " has no identity");
    std::vector<SInversePair> out;
    const int n = m.size();
    for (int x = 0; x < n; ++x) {
        if (x == *e) continue;
        for (int y = 0; y < n; ++y) {
            if (m.op(x, y) != *e) continue;
            for (int a = 0; a < n; ++a) {
                if (a == *e || a == x || a == y) continue;
                if (!(m.op(x, a) == y || m.op(a, x) == y)) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == *e || b == x || b == y) continue;
                    if (m.op(a, b) != *e) continue;
                    if (m.op(y, b) == x || m.op(b, y) == x) {
                        out.push_back({x, y, a, b});
                        if (static_cast<int>(out.size()) >= max_pairs) return out;
                        goto next_x;
                    }
                }
            }
        }
    next_x:;
    }
    return out;
}

std::vector<SConjugatePair> s_conjugate_pairs(const Magma& m, int max_pairs) {
    std::vector<SConjugatePair> out;
    const int n = m.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            for (int a = 0; a < n; ++a) {
                if (m.op(x, a) != m.op(a, y)) continue;
                bool b_ok = false, c_ok = false;
                for (int b = 0; b < n && !b_ok; ++b)
                    if (m.op(a, b) == m.op(b, x)) b_ok = true;
                for (int c = 0; c < n && !c_ok; ++c)
                    if (m.op(a, c) == m.op(c, y)) c_ok = true;
                if (b_ok && c_ok) {
                    out.push_back({x, y, a});
                    if (static_cast<int>(out.size()) >= max_pairs) return out;
                    break;
                }
            }
        }
    return out;
}

nlohmann::json sdetection_to_json(const Magma& m, const SDetection& d) {
    nlohmann::json j;
    j["structure"] = m.name();
    j["s_kind"] = d.smarandache ? ("S-" + d.target) : "not-smarandache";
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : d.witnesses) {
        nlohmann::json lw = nlohmann::json::array();
        for (int i : w.elems) lw.push_back(m.label(i));
        ws.push_back(lw);
    }
    j["witnesses"] = ws;
    nlohmann::json grades = nlohmann::json::object();
    if (d.smarandache) {
        auto base = classify(m);
        if (base.associative && !is_group(base)) {
            for (auto prop : {SProperty::commutative, SProperty::cyclic, SProperty::lagrange,
                              SProperty::simple}) {
                auto g = s_grade_magma(m, prop);
                grades["S-" + g.property] = g.strong;
                grades["S-weakly-" + g.property] = g.weak;
                if (prop == SProperty::lagrange)
                    grades["S-non-lagrange"] = g.s_non_lagrange;
                if (prop == SProperty::simple) grades["S-simple"] = g.simple;
            }
        }
    }
    j["grades"] = grades;
    return j;
}

} // namespace bialg
