#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/constructors.hpp"
#include "bialg/smarandache.hpp"

#include <algorithm>

using namespace bialg;

namespace {

bool has_witness(const SDetection& d, const Magma& m, std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    for (const auto& w : d.witnesses) {
        std::vector<std::string> got;
        for (int i : w.elems) got.push_back(m.label(i));
        std::sort(got.begin(), got.end());
        if (got == labels) return true;
    }
    return false;
}

} // namespace

TEST_CASE("Z_10 under multiplication holds the group {2,4,6,8}") {
    auto m = zn_mul(10);
    auto d = s_detect(m, STarget::group_in_semigroup);
    CHECK(d.smarandache);
    CHECK(has_witness(d, m, {"2", "4", "6", "8"}));
    // its identity is 6
    for (const auto& w : d.witnesses)
        if (w.elems == std::vector<int>{2, 4, 6, 8}) {
            REQUIRE(w.identity.has_value());
            CHECK(m.label(*w.identity) == "6");
        }
}

TEST_CASE("Z_19 under multiplication holds {1,18}, order 2 not dividing 19") {
    auto m = zn_mul(19);
    auto d = s_detect(m, STarget::group_in_semigroup);
    CHECK(d.smarandache);
    CHECK(has_witness(d, m, {"1", "18"}));
    CHECK(19 % 2 != 0);
}

TEST_CASE("witness soundness: every witness re-classifies to the claimed kind") {
    for (int n : {10, 12, 19}) {
        auto m = zn_mul(n);
        auto d = s_detect(m, STarget::group_in_semigroup);
        for (const auto& w : d.witnesses) {
            auto sub = m.restrict_to(w.elems, "w");
            CHECK(is_group(classify(sub)));
        }
    }
}

TEST_CASE("s_detect agrees with brute-force subset search at small sizes") {
    for (int n : {4, 6, 8, 9, 10}) {
        auto m = zn_mul(n);
        auto det = s_detect(m, STarget::group_in_semigroup);
        // every proper subset that is a group sits inside a maximal witness
        auto all = enumerate_subalgebras(m, SubKind::subgroup);
        for (const auto& s : all.sets) {
            if (static_cast<int>(s.size()) == m.size()) continue;
            bool inside_some_maximal = false;
            for (const auto& w : det.witnesses) {
                if (!w.maximal) continue;
                if (std::includes(w.elems.begin(), w.elems.end(), s.begin(), s.end()))
                    inside_some_maximal = true;
            }
            CHECK_MESSAGE(inside_some_maximal, "stray subgroup in Z_" << n);
        }
    }
}

TEST_CASE("group-in-loop witnesses: the pair subgroups of L_5(2)") {
    auto l = new_loop(5, 2);
    auto d = s_detect(l, STarget::group_in_loop, true);
    CHECK(d.smarandache);
    CHECK(d.witnesses.size() == 5);
    for (const auto& w : d.witnesses) CHECK(w.elems.size() == 2);
}

TEST_CASE("a proper subgroup of a group counts as a witness there") {
    // Z_4 under + is already a group; its proper subgroup {0,2} qualifies
    auto m = zn_add(4);
    auto subs = enumerate_subalgebras(m, SubKind::subgroup);
    bool found = false;
    for (auto& s : subs.sets)
        if (s == std::vector<int>{0, 2}) found = true;
    CHECK(found);
}

TEST_CASE("wrong base kind is rejected") {
    CHECK_THROWS_AS(s_detect(zn_add(4), STarget::group_in_semigroup), error);
    CHECK_THROWS_AS(s_detect(zn_mul(10), STarget::semigroup_in_groupoid), error);
    CHECK_THROWS_AS(s_detect(zn_add(4), STarget::group_in_loop), error);
}

TEST_CASE("semigroup-in-groupoid witnesses on Z_8(2,6)") {
    auto g = zn_groupoid(8, 2, 6, GroupoidTier::ZStar);
    auto d = s_detect(g, STarget::semigroup_in_groupoid, true);
    CHECK(d.smarandache);
    for (const auto& w : d.witnesses) {
        auto sub = g.restrict_to(w.elems, "w");
        CHECK(classify(sub).associative);
    }
}

TEST_CASE("S-bigroup: six-element cyclic group u S(3)") {
    auto bs = assemble({relabeled(cyclic_group(6), "a"), symmetric_semigroup(3)});
    auto d = s_bi_detect(bs);
    CHECK(d.base == BiKind::biquasi_group);
    CHECK(d.smarandache);
    CHECK(d.s_kind == "S-bigroup");
    REQUIRE(!d.witnesses.empty());
    for (const auto& w : d.witnesses) {
        auto sub = bs.part(1).restrict_to(w.parts[1], "w");
        CHECK(is_group(classify(sub)));
    }
}

TEST_CASE("S-biloop: C_9 u order-6 loop with P = {1,g3,g6} u {e,a5}") {
    auto bs = assemble({relabeled(cyclic_group(9), "c"), new_loop(5, 2)});
    auto d = s_bi_detect(bs);
    CHECK(d.base == BiKind::biloop);
    CHECK(d.smarandache);
    CHECK(d.s_kind == "S-biloop");
    bool found = false;
    for (const auto& w : d.witnesses)
        if (w.labels == std::set<std::string>{"c1", "cg3", "cg6", "e", "5"}) found = true;
    CHECK(found);
}

TEST_CASE("bisemilattices are never S-bisemigroups") {
    // two all-idempotent tables
    auto s1 = magma_from_json(nlohmann::json::parse(R"({
        "name":"s1","elements":["0","a","b","c"],
        "table":[[0,0,0,0],[0,1,0,0],[0,0,2,0],[0,0,0,3]]})"));
    auto s2 = magma_from_json(nlohmann::json::parse(R"({
        "name":"s2","elements":["z","x1","x2","x3","x4"],
        "table":[[0,0,0,0,0],[0,1,0,0,1],[0,0,2,2,0],[0,0,2,3,0],[0,1,0,0,4]]})"));
    auto bs = assemble({s1, s2});
    auto d = s_bi_detect(bs);
    CHECK(d.base == BiKind::bisemigroupII);
    CHECK_FALSE(d.smarandache);
}

TEST_CASE("S-bigroupoid needs (S-groupoid, S-semigroup) components") {
    auto bs = assemble({zn_groupoid(8, 2, 6, GroupoidTier::ZStar), symmetric_semigroup(3)});
    auto d = s_bi_detect(bs);
    CHECK(d.base == BiKind::bigroupoid);
    CHECK(d.smarandache);
    CHECK(d.s_kind == "S-bigroupoid");
}

TEST_CASE("S-Cauchy suite on C_5 u S(3)") {
    auto bs = assemble({relabeled(cyclic_group(5), "c"), symmetric_semigroup(3)});
    CHECK(bs.order() == 32);
    auto rep = s_cauchy(bs);
    const auto& s3 = bs.part(1);
    int transposition = s3.index_of("132"); // order-2 map
    int gen = bs.part(0).index_of("cg");    // g, order 5

    auto contains = [](const std::vector<SCauchyRow>& rows, int comp, int elem) {
        for (const auto& r : rows)
            if (r.component == comp && r.element == elem) return true;
        return false;
    };
    // the order-2 map: S-special Cauchy (2 | 32) but not S-Cauchy (2 does not divide 27)
    CHECK(contains(rep.s_special_cauchy, 1, transposition));
    CHECK_FALSE(contains(rep.s_cauchy, 1, transposition));
    // g of order 5: neither (5 does not divide 32)
    CHECK_FALSE(contains(rep.s_special_cauchy, 0, gen));
    CHECK_FALSE(contains(rep.s_cauchy, 0, gen));
    // reported entries satisfy their defining divisibilities
    for (const auto& r : rep.s_cauchy) {
        CHECK(bs.part(r.component).size() % r.order == 0);
        CHECK(r.order < bs.part(r.component).size());
    }
    for (const auto& r : rep.s_special_cauchy) {
        CHECK(bs.order() % r.order == 0);
        CHECK(r.order > 1);
    }
}

TEST_CASE("S-hyper bigroup of C_3 u S(3) is C_3 u S_3") {
    auto bs = assemble({relabeled(cyclic_group(3), "c"), symmetric_semigroup(3)});
    auto rep = s_grade(bs, SProperty::hyper);
    REQUIRE(rep.hyper.has_value());
    CHECK(rep.hyper->order == 3 + 6);
    CHECK_FALSE(rep.simple);
    // C_9 u S(3): the group part has proper subgroups, so no hyper witness
    auto bs2 = assemble({relabeled(cyclic_group(9), "c"), symmetric_semigroup(3)});
    auto rep2 = s_grade(bs2, SProperty::hyper);
    CHECK_FALSE(rep2.hyper.has_value());
    CHECK(rep2.simple);
}

TEST_CASE("C_9 u S(3) is S-weakly commutative but not S-commutative") {
    auto bs = assemble({relabeled(cyclic_group(9), "c"), symmetric_semigroup(3)});
    auto rep = s_grade(bs, SProperty::commutative);
    CHECK(rep.weak);
    CHECK_FALSE(rep.strong);
    for (auto prop : {SProperty::commutative, SProperty::cyclic}) {
        auto r = s_grade(bs, prop);
        if (r.strong) CHECK(r.weak);
    }
}

TEST_CASE("prime union order 31 forces S-non-Lagrange") {
    auto bs = assemble({relabeled(cyclic_group(4), "c"), symmetric_semigroup(3)});
    CHECK(bs.order() == 31);
    auto rep = s_grade(bs, SProperty::lagrange);
    CHECK(rep.s_non_lagrange);
    CHECK_FALSE(rep.s_lagrange);
    CHECK_FALSE(rep.s_weakly_lagrange);
}

TEST_CASE("S-biset: {2,3,9,0} u {-1,1,0,2} with mod-27 and mod-3 products") {
    auto rep = s_biset({2, 3, 9, 0}, {-1, 1, 0, 2}, {{true, 27}, {true, 3}});
    CHECK(rep.s_biset);
    CHECK(!rep.witness1.empty());
    CHECK(!rep.witness2.empty());
}

TEST_CASE("incomparable split is enforced; singletons have no witnesses") {
    CHECK_THROWS_AS(s_biset({0, 1}, {1}, {{true, 3}}), error); // {1} inside {0,1}
    // proper subsets of a singleton side do not exist
    auto rep = s_biset({3, 5}, {2, 7}, {{true, 4}});
    // {3}: 9 = 1 mod 4 not 3; {5}: 25 = 1 mod 4 no; first side has no witness
    CHECK_FALSE(rep.s_biset);
}

TEST_CASE("S-inverse pairs scan on Z_10 under multiplication") {
    auto m = zn_mul(10);
    auto pairs = s_inverse_pairs(m);
    for (const auto& p : pairs) {
        CHECK(m.label(m.op(p.x, p.y)) == "1");
        CHECK(m.label(m.op(p.a, p.b)) == "1");
        CHECK((m.op(p.x, p.a) == p.y || m.op(p.a, p.x) == p.y));
        CHECK((m.op(p.y, p.b) == p.x || m.op(p.b, p.y) == p.x));
    }
    // 3*7 = 21 = 1 and 3*9 = 27 = 7, 7*9 = 63 = 3, 9*9 = 81 = 1: (3,7) linked by (9,9)?
    // the scan requires a != b only through the exclusion set, so verify nonempty
    CHECK(!pairs.empty());
    CHECK_THROWS_AS(s_inverse_pairs(zn_groupoid(8, 2, 6, GroupoidTier::ZStar)), error);
}

TEST_CASE("S-conjugate pairs re-verify their defining products") {
    auto s3 = symmetric_group(3);
    auto pairs = s_conjugate_pairs(s3, 32);
    CHECK(!pairs.empty());
    for (const auto& p : pairs) CHECK(s3.op(p.x, p.a) == s3.op(p.a, p.y));
}

TEST_CASE("single-table grades: Z_19 mult is S-non-Lagrange, Z_10 weakly") {
    auto g19 = s_grade_magma(zn_mul(19), SProperty::lagrange);
    CHECK(g19.s_non_lagrange);
    CHECK_FALSE(g19.s_weakly_lagrange);
    auto g10 = s_grade_magma(zn_mul(10), SProperty::lagrange);
    CHECK(g10.s_weakly_lagrange); // {1,9} has order 2 | 10
    CHECK_FALSE(g10.s_lagrange);  // {2,4,6,8} has order 4, and 4 does not divide 10

    auto c10 = s_grade_magma(zn_mul(10), SProperty::commutative);
    CHECK(c10.strong); // all witnesses commute in a commutative semigroup
    CHECK(c10.weak);

    // S(3) carries the non-commutative witness S_3
    auto c = s_grade_magma(symmetric_semigroup(3), SProperty::commutative);
    CHECK(c.weak);
    CHECK_FALSE(c.strong);

    // Z_10: the unit group sits inside the proper subsemigroup {0,1,3,7,9}
    auto h = s_grade_magma(zn_mul(10), SProperty::hyper);
    CHECK(h.strong);
    CHECK_FALSE(h.simple);
}
