#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/constructors.hpp"
#include "bialg/magma.hpp"

using namespace bialg;

namespace {

// A frozen non-associative loop of order 5 on carrier {e,a,b,c,d}.
Magma loop5() {
    return magma_from_json(nlohmann::json::parse(R"({
      "name": "loop5",
      "elements": ["e","a","b","c","d"],
      "table": [[0,1,2,3,4],
                [1,0,3,4,2],
                [2,4,0,1,3],
                [3,2,4,0,1],
                [4,3,1,2,0]]
    })"));
}

} // namespace

TEST_CASE("classify recognizes the standard kinds") {
    auto z4 = zn_add(4);
    auto r = classify(z4);
    CHECK(r.kind == MagmaKind::group);
    CHECK(r.commutative);

    auto z10m = zn_mul(10);
    auto rm = classify(z10m);
    CHECK(rm.kind == MagmaKind::monoid);
    CHECK(rm.commutative);
    CHECK(rm.identity.has_value());
    CHECK(z10m.label(*rm.identity) == "1");
    CHECK_FALSE(rm.has_inverses);

    auto l = new_loop(5, 2);
    auto rl = classify(l);
    CHECK(rl.kind == MagmaKind::loop);
    CHECK_FALSE(rl.associative);
    CHECK_FALSE(rl.commutative);
}

TEST_CASE("classification witnesses re-fail on recheck") {
    auto l = new_loop(5, 2);
    auto r = classify(l);
    REQUIRE(r.assoc_witness.has_value());
    auto [a, b, c] = *r.assoc_witness;
    CHECK(l.op(l.op(a, b), c) != l.op(a, l.op(b, c)));
    REQUIRE(r.comm_witness.has_value());
    auto [x, y] = *r.comm_witness;
    CHECK(l.op(x, y) != l.op(y, x));
}

TEST_CASE("the frozen order-5 loop is a non-associative loop") {
    auto l = loop5();
    auto r = classify(l);
    CHECK(r.kind == MagmaKind::loop);
    CHECK_FALSE(r.associative);
}

TEST_CASE("identity checks on groups: associativity consequences") {
    // every built-in group constructor satisfies the associativity-implied
    // identities; WIP needs only associativity, Bruck's inverse clause holds
    // exactly on the abelian ones
    for (const Magma& g : {zn_add(6), cyclic_group(5), symmetric_group(3),
                           alternating_group(4), dihedral_group(4), gl2(2)}) {
        for (auto k : {IdentityKind::Moufang1, IdentityKind::Moufang2, IdentityKind::Moufang3,
                       IdentityKind::Bol, IdentityKind::LeftAlternative,
                       IdentityKind::RightAlternative, IdentityKind::PIdentity,
                       IdentityKind::WIP}) {
            auto chk = check_identity(g, k);
            CHECK_MESSAGE(chk.holds, g.name() << " fails " << to_string(k));
            CHECK(chk.skipped.empty());
        }
        bool abelian = classify(g).commutative;
        CHECK(check_identity(g, IdentityKind::Bruck).holds == abelian);
    }
}

TEST_CASE("L5(2) fails associativity with a concrete witness") {
    auto l = new_loop(5, 2);
    auto chk = check_identity(l, IdentityKind::Associative);
    CHECK_FALSE(chk.holds);
    REQUIRE(chk.witness.has_value());
    auto w = *chk.witness;
    CHECK(l.op(l.op(w[0], w[1]), w[2]) != l.op(w[0], l.op(w[1], w[2])));
}

TEST_CASE("P-identity fails on Z_8(2,6) with witness x=1, y=0") {
    auto g = zn_groupoid(8, 2, 6, GroupoidTier::ZStar);
    auto chk = check_identity(g, IdentityKind::PIdentity);
    CHECK_FALSE(chk.holds);
    REQUIRE(chk.witness.has_value());
    CHECK((*chk.witness)[0] == 1);
    CHECK((*chk.witness)[1] == 0);
    // LHS (xy)x = 2, RHS x(yx) = 6
    int x = 1, y = 0;
    CHECK(g.op(g.op(x, y), x) == 2);
    CHECK(g.op(x, g.op(y, x)) == 6);
}

TEST_CASE("Bruck and WIP require an identity element") {
    auto g = zn_groupoid(8, 2, 6, GroupoidTier::ZStar);
    CHECK_THROWS_AS(check_identity(g, IdentityKind::Bruck), error);
    CHECK_THROWS_AS(check_identity(g, IdentityKind::WIP), error);
}

TEST_CASE("subgroup enumeration of S_3 finds all six subgroups") {
    auto s3 = symmetric_group(3);
    auto subs = enumerate_subalgebras(s3, SubKind::subgroup);
    CHECK(subs.exhaustive);
    REQUIRE(subs.sets.size() == 6);
    std::vector<size_t> sizes;
    for (auto& s : subs.sets) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 2, 2, 3, 6});
    // classical Lagrange as oracle: all sizes divide 6
    for (auto s : sizes) CHECK(6 % s == 0);
}

TEST_CASE("subgroups of L5(2) are exactly the pairs {e,i}") {
    auto l = new_loop(5, 2);
    auto subs = enumerate_subalgebras(l, SubKind::subgroup);
    // {e} plus the five pairs {e,i}; the whole loop is not a group
    REQUIRE(subs.sets.size() == 6);
    int pairs = 0;
    for (auto& s : subs.sets) {
        CHECK(s[0] == 0); // every subgroup contains e
        if (s.size() == 2) ++pairs;
    }
    CHECK(pairs == 5);
}

TEST_CASE("trivial one-element magma has itself as only subsemigroup") {
    auto one = cyclic_group(1);
    auto subs = enumerate_subalgebras(one, SubKind::subsemigroup);
    REQUIRE(subs.sets.size() == 1);
    CHECK(subs.sets[0] == std::vector<int>{0});
}

TEST_CASE("local invariants of an abelian group fill the whole carrier") {
    auto g = zn_add(6);
    auto inv = local_invariants(g);
    CHECK(inv.moufang_center.size() == 6);
    CHECK(inv.nucleus.size() == 6);
    CHECK(inv.center.size() == 6);
    CHECK(inv.commutator_subloop == std::vector<int>{0});
    CHECK(inv.associator_subloop == std::vector<int>{0});
}

TEST_CASE("local invariants of L5(2), frozen") {
    auto l = new_loop(5, 2);
    auto inv = local_invariants(l);
    // computed once by the exhaustive quantifier scan and frozen here
    CHECK(inv.nucleus == std::vector<int>{0});
    CHECK(inv.moufang_center == std::vector<int>{0});
    CHECK(inv.center == std::vector<int>{0});
    CHECK(inv.commutator_subloop.size() == 6);
    CHECK(inv.associator_subloop.size() == 6);
    // nuclei are subloops: closed and contain e
    for (auto* s : {&inv.left_nucleus, &inv.middle_nucleus, &inv.right_nucleus}) {
        CHECK(std::find(s->begin(), s->end(), 0) != s->end());
        for (int a : *s)
            for (int b : *s)
                CHECK(std::find(s->begin(), s->end(), l.op(a, b)) != s->end());
    }
    CHECK_THROWS_AS(local_invariants(zn_mul(6)), error);
}

TEST_CASE("element orders divide the group order") {
    auto g = dihedral_group(6);
    for (int x = 0; x < g.size(); ++x) {
        auto k = element_order(g, x);
        REQUIRE(k.has_value());
        CHECK(g.size() % *k == 0);
    }
    CHECK(*element_order(g, 0) == 1);
    CHECK_THROWS_AS(element_order(zn_groupoid(8, 2, 6, GroupoidTier::ZStar), 1), error);
}

TEST_CASE("magma JSON round-trips and rejects bad documents") {
    auto l = loop5();
    auto doc = magma_to_json(l);
    auto back = magma_from_json(doc);
    CHECK(back.labels() == l.labels());
    CHECK(back.table() == l.table());
    CHECK(magma_to_json(back) == doc);

    auto bad = doc;
    bad["table"][0][0] = 5; // == n, out of range
    CHECK_THROWS_AS(magma_from_json(bad), error);
    auto dup = doc;
    dup["elements"][1] = "e";
    CHECK_THROWS_AS(magma_from_json(dup), error);
}

TEST_CASE("normalizer collects commuting elements") {
    auto s3 = symmetric_group(3);
    int t = s3.index_of("213");
    auto n = normalizer(s3, t);
    CHECK(n.size() == 2); // {e, t}
    for (int x : n) CHECK(s3.op(x, t) == s3.op(t, x));
    CHECK(normalizer(zn_add(6), 2).size() == 6);
}

TEST_CASE("componentwise quotients collapse cosets") {
    auto z6 = zn_add(6);
    auto q = quotient_group(z6, {0, 3});
    CHECK(q.size() == 3);
    CHECK(classify(q).kind == MagmaKind::group);

    auto s3 = symmetric_group(3);
    std::vector<int> a3;
    for (auto& s : enumerate_subalgebras(s3, SubKind::subgroup).sets)
        if (s.size() == 3) a3 = s;
    auto q2 = quotient_group(s3, a3);
    CHECK(q2.size() == 2);

    std::vector<int> two;
    for (auto& s : enumerate_subalgebras(s3, SubKind::subgroup).sets)
        if (s.size() == 2) two = s;
    CHECK_THROWS_AS(quotient_group(s3, two), error); // not normal
    CHECK_THROWS_AS(quotient_group(zn_mul(6), {0}), error); // not a group
}

TEST_CASE("exhaustive enumeration above the cap is refused when demanded") {
    auto g = cyclic_group(16);
    CHECK_THROWS_AS(enumerate_subalgebras(g, SubKind::subgroup, 1 << 20, true), error);
    auto subs = enumerate_subalgebras(g, SubKind::subgroup);
    CHECK_FALSE(subs.exhaustive);
    // all five subgroups of C_16 are one-generated, so none are missed
    CHECK(subs.sets.size() == 5);
}

TEST_CASE("element order is none when the identity is unreachable") {
    auto m = zn_mul(10);
    CHECK_FALSE(element_order(m, 0).has_value());
    CHECK(*element_order(m, 3) == 4); // 3,9,7,1
}

TEST_CASE("semialternative holds on groups (associators all vanish)") {
    auto chk = check_identity(zn_add(5), IdentityKind::Semialternative);
    CHECK(chk.holds);
    CHECK_THROWS_AS(check_identity(zn_mul(10), IdentityKind::Semialternative), error);
}
