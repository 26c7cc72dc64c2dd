#include <doctest.h>

#include <algorithm>
#include <random>

#include "endocable/perm.hpp"

using namespace endocable;

TEST_CASE("composition convention: p * q applies q first") {
    Perm id = Perm::identity(3);
    Perm p = Perm::cycle(3, {0, 1});
    Perm q = Perm::cycle(3, {1, 2});
    CHECK(id * p == p);
    CHECK(p * id == p);
    CHECK(p * p.inverse() == id);
    // p(q(.)) is the 3-cycle 0 -> 1 -> 2 -> 0
    CHECK(p * q == Perm({1, 2, 0}));
}

TEST_CASE("permutation constructor rejects non-bijections") {
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::cycle(4, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("cycle structure") {
    auto cs_id = Perm::identity(4).cycle_structure();
    CHECK(cs_id.order == 1);
    CHECK(cs_id.cycle_type == std::vector<int>{1, 1, 1, 1});
    CHECK_FALSE(cs_id.is_full_cycle);

    auto cs_full = Perm::rotation(4, 1).cycle_structure();
    CHECK(cs_full.order == 4);
    CHECK(cs_full.cycle_type == std::vector<int>{4});
    CHECK(cs_full.is_full_cycle);

    Perm dbl = Perm::cycle(4, {0, 1}) * Perm::cycle(4, {2, 3});
    auto cs_dbl = dbl.cycle_structure();
    CHECK(cs_dbl.order == 2);
    CHECK(cs_dbl.cycle_type == std::vector<int>{2, 2});

    CHECK(Perm::rotation(6, 2).cycle_structure().cycle_type ==
          std::vector<int>{3, 3});
}

TEST_CASE("power handles negative exponents") {
    Perm r = Perm::rotation(5, 1);
    CHECK(r.power(0) == Perm::identity(5));
    CHECK(r.power(7) == Perm::rotation(5, 2));
    CHECK(r.power(-2) == Perm::rotation(5, 3));
}

TEST_CASE("parse and to_string round-trip") {
    Perm p({2, 0, 1, 3});
    CHECK(Perm::parse(p.to_string()) == p);
    CHECK_THROWS(Perm::parse("0 0 1"));
}

TEST_CASE("closure of the identity is trivial") {
    PermGroup g = PermGroup::closure({Perm::identity(5)});
    CHECK(g.size() == 1);
    CHECK(g.element(0).is_identity());
}

TEST_CASE("closure of a 4-cycle is cyclic of order 4") {
    PermGroup g = PermGroup::closure({Perm::rotation(4, 1)});
    CHECK(g.size() == 4);
    CHECK(g.is_transitive());
    CHECK(g.is_semiregular());
    CHECK(g.center().size() == 4);
}

TEST_CASE("closure is independent of generator order") {
    std::vector<Perm> gens = {Perm::cycle(4, {0, 1}), Perm::rotation(4, 1),
                              Perm::cycle(4, {2, 3})};
    PermGroup ref = PermGroup::closure(gens);
    std::vector<Perm> ref_elems = ref.elements();
    std::sort(ref_elems.begin(), ref_elems.end());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        PermGroup g = PermGroup::closure(gens);
        std::vector<Perm> elems = g.elements();
        std::sort(elems.begin(), elems.end());
        CHECK(elems == ref_elems);
    }
}

TEST_CASE("closure words multiply out to their element") {
    PermGroup g =
        PermGroup::closure({Perm::cycle(5, {0, 1}), Perm::rotation(5, 1)});
    CHECK(g.size() == 120);
    for (std::size_t id = 0; id < g.size(); ++id) {
        Perm prod = Perm::identity(5);
        for (int gi : g.word(static_cast<int>(id))) prod = prod * g.generators()[gi];
        CHECK(prod == g.element(static_cast<int>(id)));
    }
}

TEST_CASE("closure cap") {
    CHECK_THROWS_AS(
        PermGroup::closure({Perm::cycle(5, {0, 1}), Perm::rotation(5, 1)}, 100),
        CapExceededError);
}

TEST_CASE("orbits and transitivity") {
    PermGroup g = PermGroup::closure({Perm::cycle(3, {0, 1})});
    auto orbits = g.orbits();
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0] == std::vector<int>{0, 1});
    CHECK(orbits[1] == std::vector<int>{2});
    CHECK_FALSE(g.is_transitive());
    CHECK_FALSE(g.is_semiregular());  // (0 1) fixes the point 2
}

TEST_CASE("centralizer queries by exhaustive commutation") {
    PermGroup s4 =
        PermGroup::closure({Perm::cycle(4, {0, 1}), Perm::rotation(4, 1)});
    CHECK(s4.size() == 24);
    CHECK(s4.center().size() == 1);

    int r2 = s4.index_of(Perm::rotation(4, 2));
    REQUIRE(r2 >= 0);
    auto cz = s4.centralizer_of({r2});
    CHECK(cz.size() == 8);
}

TEST_CASE("center of a transitive group acts without fixed points") {
    std::vector<PermGroup> groups;
    groups.push_back(PermGroup::closure({Perm::rotation(6, 1)}));
    groups.push_back(
        PermGroup::closure({Perm::rotation(4, 1), Perm::cycle(4, {0, 2})}));
    groups.push_back(
        PermGroup::closure({Perm::rotation(8, 2), Perm::cycle(8, {0, 1})}));
    for (const PermGroup& g : groups) {
        if (!g.is_transitive()) continue;
        for (int z : g.center()) {
            const Perm& p = g.element(z);
            if (!p.is_identity()) CHECK_FALSE(p.has_fixed_point());
        }
    }
}
