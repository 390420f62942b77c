#include "bialg/bistruct.hpp"

#include <algorithm>
#include <map>

namespace bialg {

const char* to_string(BiKind k) {
    switch (k) {
        case BiKind::bigroup: return "bigroup";
        case BiKind::bisemigroupII: return "bisemigroupII";
        case BiKind::biloop: return "biloop";
        case BiKind::bigroupoid: return "bigroupoid";
        case BiKind::biquasi_group: return "biquasi-group";
        case BiKind::biquasi_loop: return "biquasi-loop";
        case BiKind::biquasi_semigroup: return "biquasi-semigroup";
        case BiKind::biquasi_groupoid: return "biquasi-groupoid";
        case BiKind::quad_group: return "quad-group";
        case BiKind::invalid: return "invalid";
    }
    return "?";
}

const char* to_string(LagrangeVerdict v) {
    switch (v) {
        case LagrangeVerdict::lagrange: return "Lagrange";
        case LagrangeVerdict::weakly: return "weakly-Lagrange";
        case LagrangeVerdict::non_lagrange: return "non-Lagrange";
    }
    return "?";
}

BiStructure assemble(std::vector<Magma> components, std::vector<std::string> sharing) {
    if (components.size() != 2 && components.size() != 4)
        fail("SchemaError", "a bistructure has 2 or 4 components");
    // supports must be proper and incomparable
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
            if (contained)
                fail("NestedSupports", "support of " + components[i].name() +
                                           " is contained in " + components[j].name());
        }
    std::set<std::string> share(sharing.begin(), sharing.end());
    std::map<std::string, int> count;
    std::vector<std::string> universe;
    for (const auto& c : components)
        for (const auto& l : c.labels()) {
            if (++count[l] == 1) universe.push_back(l);
        }
    for (const auto& [l, k] : count) {
        if (k > 1 && !share.count(l))
            fail("UndeclaredSharing", "label '" + l + "' appears in several supports");
    }
    for (const auto& l : share) {
        if (!count.count(l))
            fail("UncoveredUniverse", "shared label '" + l + "' not in any support");
        if (count[l] < 2)
            fail("UndeclaredSharing", "label '" + l + "' declared shared but used once");
    }
    BiStructure bs;
    bs.universe = std::move(universe);
    for (auto& c : components) bs.components.push_back({std::move(c)});
    bs.sharing = std::move(sharing);
    return bs;
}

BiKind classify_bi(const BiStructure& bs) {
    std::vector<ClassificationReport> r;
    for (const auto& c : bs.components) r.push_back(classify(c.algebra));

    if (bs.arity() == 4) {
        for (const auto& x : r)
            if (!is_group(x)) return BiKind::invalid;
        return BiKind::quad_group;
    }

    auto group = [&](int i) { return is_group(r[i]); };
    auto proper_loop = [&](int i) { return r[i].kind == MagmaKind::loop; };
    auto loopish = [&](int i) { return is_loop_or_group(r[i]); };
    auto semigroup = [&](int i) { return r[i].associative; };
    auto proper_groupoid = [&](int i) { return !r[i].associative; };
    auto matches = [&](auto p, auto q) { return (p(0) && q(1)) || (p(1) && q(0)); };

    if (group(0) && group(1)) return BiKind::bigroup;
    if (loopish(0) && loopish(1) && (proper_loop(0) || proper_loop(1))) return BiKind::biloop;
    if (matches(group, [&](int i) { return semigroup(i) && !group(i); }))
        return BiKind::biquasi_group;
    if (matches(proper_loop, proper_groupoid)) return BiKind::biquasi_loop;
    if (matches(proper_loop, semigroup)) return BiKind::biquasi_semigroup;
    if (matches(group, proper_groupoid)) return BiKind::biquasi_groupoid;
    if (matches(proper_groupoid, semigroup)) return BiKind::bigroupoid;
    if (semigroup(0) && semigroup(1)) return BiKind::bisemigroupII;
    return BiKind::invalid;
}

SubBiStructure make_sub(const BiStructure& bs, std::vector<std::vector<int>> parts) {
    if (parts.size() != bs.components.size())
        fail("SchemaError", "one part per component expected");
    SubBiStructure sub;
    sub.parts = std::move(parts);
    for (size_t i = 0; i < sub.parts.size(); ++i) {
        sub.biorder += static_cast<int>(sub.parts[i].size());
        for (int e : sub.parts[i]) sub.labels.insert(bs.part(static_cast<int>(i)).label(e));
    }
    sub.order = static_cast<int>(sub.labels.size());
    return sub;
}

namespace {

SubKind sub_kind_for(const BiStructure& bs, int component) {
    auto r = classify(bs.part(component));
    if (is_group(r)) return SubKind::subgroup;
    if (r.latin && r.identity) return SubKind::subloop;
    return SubKind::subsemigroup;
}

std::vector<std::vector<std::vector<int>>> componentwise_subs(const BiStructure& bs) {
    std::vector<std::vector<std::vector<int>>> per;
    for (int i = 0; i < bs.arity(); ++i) {
        auto lst = enumerate_subalgebras(bs.part(i), sub_kind_for(bs, i));
        per.push_back(std::move(lst.sets));
    }
    return per;
}

bool is_whole(const BiStructure& bs, const SubBiStructure& s) {
    for (size_t i = 0; i < s.parts.size(); ++i)
        if (static_cast<int>(s.parts[i].size()) != bs.part(static_cast<int>(i)).size())
            return false;
    return true;
}

bool all_trivial(const SubBiStructure& s) {
    for (const auto& p : s.parts)
        if (p.size() != 1) return false;
    return true;
}

} // namespace

std::vector<SubBiStructure> enumerate_sub(const BiStructure& bs) {
    auto per = componentwise_subs(bs);
    std::vector<SubBiStructure> out;
    std::vector<size_t> idx(per.size(), 0);
    while (true) {
        std::vector<std::vector<int>> parts;
        for (size_t i = 0; i < per.size(); ++i) parts.push_back(per[i][idx[i]]);
        out.push_back(make_sub(bs, std::move(parts)));
        size_t k = 0;
        while (k < per.size() && ++idx[k] == per[k].size()) idx[k++] = 0;
        if (k == per.size()) break;
    }
    return out;
}

LagrangeReport lagrange_report(const BiStructure& bs) {
    LagrangeReport rep;
    rep.order = bs.order();
    bool all = true, any = false, seen = false;
    for (auto& s : enumerate_sub(bs)) {
        if (is_whole(bs, s) || all_trivial(s)) continue;
        bool div = rep.order % s.order == 0;
        rep.entries.push_back({s, s.order, div});
        seen = true;
        all = all && div;
        any = any || div;
    }
    rep.verdict = !seen      ? LagrangeVerdict::lagrange // vacuous
                  : all      ? LagrangeVerdict::lagrange
                  : any      ? LagrangeVerdict::weakly
                             : LagrangeVerdict::non_lagrange;
    return rep;
}

BiorderReport biorder_and_pseudo(const BiStructure& bs,
                                 const std::vector<std::vector<int>>& parts) {
    if (parts.size() != bs.components.size())
        fail("SchemaError", "one part per component expected");
    BiorderReport rep;
    std::set<std::string> labels;
    rep.pseudo_divides = true;
    for (size_t i = 0; i < parts.size(); ++i) {
        rep.biorder += static_cast<int>(parts[i].size());
        for (int e : parts[i]) labels.insert(bs.part(static_cast<int>(i)).label(e));
        bool div = !parts[i].empty() &&
                   bs.part(static_cast<int>(i)).size() % static_cast<int>(parts[i].size()) == 0;
        rep.component_divisibility.push_back(div);
        rep.pseudo_divides = rep.pseudo_divides && div;
    }
    rep.order = static_cast<int>(labels.size());
    rep.biorder_divides_order = rep.biorder > 0 && bs.order() % rep.biorder == 0;
    return rep;
}

std::vector<CauchyRow> cauchy_elements(const BiStructure& bs) {
    std::vector<CauchyRow> rows;
    for (int c = 0; c < bs.arity(); ++c) {
        const auto& m = bs.part(c);
        if (!m.identity()) fail("NoIdentity", m.name() + " has no identity");
        for (int x = 0; x < m.size(); ++x) {
            auto k = element_order(m, x);
            if (!k) continue;
            rows.push_back({c, x, *k, bs.order() % *k == 0});
        }
    }
    return rows;
}

namespace {

int p_part(int n, int p) {
    int q = 1;
    while (n % (q * p) == 0) q *= p;
    return q;
}

} // namespace

std::vector<SubBiStructure> sylow_search(const BiStructure& bs, int p1, int p2) {
    if (bs.arity() != 2) fail("SchemaError", "sylow_search expects two components");
    auto per = componentwise_subs(bs);
    const int q1 = p_part(bs.part(0).size(), p1);
    const int q2 = p_part(bs.part(1).size(), p2);
    std::vector<SubBiStructure> out;
    if (q1 == 1 || q2 == 1) return out;
    for (const auto& h1 : per[0]) {
        if (static_cast<int>(h1.size()) != q1) continue;
        for (const auto& h2 : per[1]) {
            if (static_cast<int>(h2.size()) != q2) continue;
            out.push_back(make_sub(bs, {h1, h2}));
        }
    }
    return out;
}

std::vector<SubBiStructure> sylow_p(const BiStructure& bs, int p) {
    std::vector<SubBiStructure> out;
    const int n = bs.order();
    if (n % p != 0) return out;
    const int q = p_part(n, p);
    for (auto& s : enumerate_sub(bs))
        if (s.order == q && !is_whole(bs, s)) out.push_back(s);
    return out;
}

std::set<std::string> bicoset(const BiStructure& bs, const SubBiStructure& h,
                              const std::string& a, CosetSide side) {
    if (bs.arity() != 2) fail("SchemaError", "bicoset expects two components");
    bool in0 = bs.part(0).find(a).has_value();
    bool in1 = bs.part(1).find(a).has_value();
    if (!in0 && !in1) fail("UnknownLabel", "'" + a + "' not in the universe");

    auto translate = [&](int comp) {
        std::set<std::string> out;
        const auto& m = bs.part(comp);
        int ai = m.index_of(a);
        for (int x : h.parts[comp])
            out.insert(m.label(side == CosetSide::right ? m.op(x, ai) : m.op(ai, x)));
        return out;
    };
    auto plain = [&](int comp) {
        std::set<std::string> out;
        for (int x : h.parts[comp]) out.insert(bs.part(comp).label(x));
        return out;
    };

    std::set<std::string> result;
    auto merge = [&](std::set<std::string> s) { result.insert(s.begin(), s.end()); };
    if (in0 && in1) {
        merge(translate(0));
        merge(translate(1));
    } else if (in0) {
        merge(translate(0));
        merge(plain(1));
    } else {
        merge(plain(0));
        merge(translate(1));
    }
    return result;
}

namespace {

// xP = Px, (Px)y = P(xy) and y(xP) = (yx)P, scanned over the whole component.
bool normal_in_component(const Magma& m, const std::vector<int>& part) {
    auto set_of = [&](auto&& f) {
        std::set<int> s;
        for (int h : part) s.insert(f(h));
        return s;
    };
    for (int x = 0; x < m.size(); ++x) {
        auto xp = set_of([&](int h) { return m.op(x, h); });
        auto px = set_of([&](int h) { return m.op(h, x); });
        if (xp != px) return false;
        for (int y = 0; y < m.size(); ++y) {
            auto lhs1 = set_of([&](int h) { return m.op(m.op(h, x), y); });
            auto rhs1 = set_of([&](int h) { return m.op(h, m.op(x, y)); });
            if (lhs1 != rhs1) return false;
            auto lhs2 = set_of([&](int h) { return m.op(y, m.op(x, h)); });
            auto rhs2 = set_of([&](int h) { return m.op(m.op(y, x), h); });
            if (lhs2 != rhs2) return false;
        }
    }
    return true;
}

} // namespace

bool normal_check(const BiStructure& bs, const SubBiStructure& h) {
    for (int c = 0; c < bs.arity(); ++c)
        if (!normal_in_component(bs.part(c), h.parts[c])) return false;
    return true;
}

bool verify_bi_homomorphism(const BiStructure& from, const BiStructure& to,
                            const std::vector<std::vector<int>>& maps) {
    if (from.arity() != to.arity() || static_cast<int>(maps.size()) != from.arity())
        fail("SchemaError", "one map per component expected");
    for (int c = 0; c < from.arity(); ++c) {
        const auto& f = maps[c];
        const auto& src = from.part(c);
        const auto& dst = to.part(c);
        if (static_cast<int>(f.size()) != src.size())
            fail("SchemaError", "map must cover the source component");
        for (int v : f)
            if (v < 0 || v >= dst.size()) fail("IndexOutOfRange", "map image");
        for (int a = 0; a < src.size(); ++a)
            for (int b = 0; b < src.size(); ++b)
                if (f[src.op(a, b)] != dst.op(f[a], f[b])) return false;
    }
    return true;
}

std::vector<Magma> componentwise_quotients(const BiStructure& bs, const SubBiStructure& h) {
    std::vector<Magma> out;
    for (int c = 0; c < bs.arity(); ++c) out.push_back(quotient_group(bs.part(c), h.parts[c]));
    return out;
}

BiStructure bistructure_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("components"))
        fail("SchemaError", "bistructure document needs 'components'");
    std::vector<Magma> comps;
    for (const auto& c : doc["components"]) {
        if (!c.contains("algebra")) fail("SchemaError", "component needs an 'algebra'");
        auto m = magma_from_json(c["algebra"]);
        if (c.contains("support")) {
            std::vector<std::string> support = c["support"].get<std::vector<std::string>>();
            if (support != m.labels())
                fail("SchemaError", "support must list the algebra labels in order");
        }
        comps.push_back(std::move(m));
    }
    std::vector<std::string> sharing;
    if (doc.contains("sharing")) sharing = doc["sharing"].get<std::vector<std::string>>();
    auto bs = assemble(std::move(comps), std::move(sharing));
    if (doc.contains("universe")) {
        auto declared = doc["universe"].get<std::vector<std::string>>();
        auto sorted = declared;
        auto actual = bs.universe;
        std::sort(sorted.begin(), sorted.end());
        std::sort(actual.begin(), actual.end());
        if (sorted != actual) fail("UncoveredUniverse", "declared universe mismatch");
    }
    return bs;
}

nlohmann::json bistructure_to_json(const BiStructure& bs) {
    nlohmann::json doc;
    doc["universe"] = bs.universe;
    doc["sharing"] = bs.sharing;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : bs.components) {
        nlohmann::json jc;
        jc["support"] = c.algebra.labels();
        jc["algebra"] = magma_to_json(c.algebra);
        comps.push_back(jc);
    }
    doc["components"] = comps;
    return doc;
}

} // namespace bialg
