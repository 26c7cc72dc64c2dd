#include <doctest.h>

#include <algorithm>

#include "endocable/cycleset.hpp"
#include "endocable/search.hpp"

using namespace endocable;

namespace {

// X and Y side by side, with the trivial action across the two parts.
CycleSet disjoint_union(const CycleSet& X, const CycleSet& Y) {
    const int n = X.size(), m = Y.size();
    std::vector<std::vector<int>> t(n + m, std::vector<int>(n + m));
    for (int a = 0; a < n + m; ++a)
        for (int b = 0; b < n + m; ++b) {
            if (a < n && b < n)
                t[a][b] = X.op(a, b);
            else if (a >= n && b >= n)
                t[a][b] = Y.op(a - n, b - n) + n;
            else
                t[a][b] = b;
        }
    return CycleSet::validate(std::move(t));
}

}  // namespace

TEST_CASE("validate accepts the exceptional size-4 set and the trivial one") {
    CycleSet X = x4_19();
    CHECK(X.size() == 4);
    CycleSet T5 = CycleSet::trivial(5);
    for (int x = 0; x < 5; ++x) CHECK(T5.sigma(x).is_identity());
}

TEST_CASE("validate names the violated axiom") {
    CHECK_THROWS_AS(CycleSet::validate({{0, 0}, {0, 1}}), CycleSetError);
    try {
        CycleSet::validate({{1, 0, 2}, {1, 0, 2}, {2, 1, 0}});
        FAIL("expected a rejection");
    } catch (const CycleSetError& e) {
        CHECK(e.kind == CycleSetError::Kind::CycloidViolation);
    }
    try {
        CycleSet::validate({{0, 0}, {0, 1}});
        FAIL("expected a rejection");
    } catch (const CycleSetError& e) {
        CHECK(e.kind == CycleSetError::Kind::RowNotBijective);
        CHECK(e.x == 0);
    }
}

TEST_CASE("sigma, lambda and the convention lock") {
    CycleSet X = x4_19();
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) CHECK(X.sigma(x)(y) == X.op(x, y));
        CHECK(X.lambda(x) == X.sigma(x).inverse());
    }
}

TEST_CASE("diagonal of the exceptional set is a full 4-cycle") {
    CHECK(x4_19().diagonal() == Perm::rotation(4, 1));
    CHECK(CycleSet::trivial(3).diagonal().is_identity());
}

TEST_CASE("permutation group sizes") {
    CHECK(permutation_group(CycleSet::trivial(4)).size() == 1);
    CHECK(permutation_group(x4_19()).size() == 8);
}

TEST_CASE("retraction") {
    CycleSet X = x4_19();
    Retraction r = retract(X);
    CHECK(r.quotient.size() == 4);  // irretractable: all rows distinct
    CHECK_FALSE(is_retractable(X));

    Retraction t = retract(CycleSet::trivial(4));
    CHECK(t.quotient.size() == 1);
    CHECK(t.classes.size() == 1);
    CHECK(t.projection == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("multipermutation level") {
    MplResult m1 = mpl(CycleSet::trivial(1));
    CHECK(m1.finite);
    CHECK(m1.level == 0);

    MplResult m2 = mpl(CycleSet::trivial(6));
    CHECK(m2.finite);
    CHECK(m2.level == 1);

    MplResult m3 = mpl(x4_19());
    CHECK_FALSE(m3.finite);
    REQUIRE(m3.stationary.has_value());
    CHECK(*m3.stationary == x4_19());  // stationary at itself
    CHECK(m3.tower_sizes == std::vector<int>{4, 4});
}

TEST_CASE("decomposition") {
    Decomposition d = decomposition(x4_19());
    CHECK(d.indecomposable);
    CHECK(d.orbits.size() == 1);

    Decomposition t = decomposition(CycleSet::trivial(3));
    CHECK_FALSE(t.indecomposable);
    CHECK(t.orbits.size() == 3);

    CycleSet two = disjoint_union(x4_19(), x4_19());
    Decomposition dd = decomposition(two);
    CHECK(dd.orbits.size() == 2);
}

TEST_CASE("generated sub-cycle sets and irreducibility") {
    CycleSet X = x4_19();
    CHECK(generated_subcycleset(X, {0}) == std::vector<int>{0, 1, 2, 3});
    CHECK(is_irreducible(X));

    CycleSet T3 = CycleSet::trivial(3);
    CHECK(generated_subcycleset(T3, {0}) == std::vector<int>{0});
    CHECK_FALSE(is_irreducible(T3));
    CHECK(generated_subcycleset(T3, {0, 1, 2}) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(generated_subcycleset(X, {}), std::invalid_argument);
}

TEST_CASE("pi-type") {
    PiTypeResult pt = pi_type(x4_19());
    CHECK(pt.primes_of_size == std::vector<long long>{2});
    CHECK(pt.primes_of_group == std::vector<long long>{2});
    CHECK(pt.is_pi_type);
    CHECK(pt.is_p_type);

    PiTypeResult singleton = pi_type(CycleSet::trivial(1));
    CHECK(singleton.is_pi_type);
    CHECK_FALSE(singleton.is_p_type);

    CHECK_THROWS_AS(pi_type(CycleSet::trivial(2)), NotIndecomposableError);
}

TEST_CASE("isomorphism finds relabellings and refuses mismatches") {
    CycleSet X = x4_19();
    auto self = isomorphism(X, X);
    REQUIRE(self.has_value());
    CHECK((*self == std::vector<int>{0, 1, 2, 3}));

    CycleSet Y = relabel(X, Perm::rotation(4, 1));
    CHECK(are_isomorphic(X, Y));
    auto f = isomorphism(X, Y);
    REQUIRE(f.has_value());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK((*f)[X.op(a, b)] == Y.op((*f)[a], (*f)[b]));

    CHECK_FALSE(are_isomorphic(X, CycleSet::trivial(4)));
    CHECK_FALSE(are_isomorphic(X, CycleSet::trivial(3)));
    CHECK_THROWS_AS(
        are_isomorphic(CycleSet::trivial(9), CycleSet::trivial(9), 8),
        SizeCapExceededError);
}

TEST_CASE("file format round-trip and rejection") {
    CycleSet X = x4_19();
    CHECK(CycleSet::parse(X.serialize()) == X);

    CycleSet F = CycleSet::load(std::string(ENDOCABLE_FIXTURES) + "/x4_19.cs");
    CHECK(F == X);

    CHECK_THROWS_AS(CycleSet::parse("4\n1 0 2 3\n3 2 0 1\n0 1 3 2\n2 3 1 7\n"),
                    CycleSetError);
    CHECK_THROWS_AS(CycleSet::parse(""), CycleSetError);
    CHECK_THROWS_AS(CycleSet::parse("2\n0 1\n"), CycleSetError);
    CHECK_THROWS_AS(CycleSet::parse("2\n0 x\n0 1\n"), CycleSetError);
    // comments are ignored
    CHECK(CycleSet::parse("# c\n1\n# c\n0\n") == CycleSet::trivial(1));
}

TEST_CASE("retraction projection is a homomorphism with equal fibers when "
          "indecomposable") {
    for (const CycleSet& X : enumerate_cyclesets(4, true)) {
        Retraction r = retract(X);
        for (int a = 0; a < X.size(); ++a)
            for (int b = 0; b < X.size(); ++b)
                CHECK(r.projection[X.op(a, b)] ==
                      r.quotient.op(r.projection[a], r.projection[b]));
        if (decomposition(X).indecomposable) {
            std::size_t fiber = r.classes[0].size();
            for (const auto& cls : r.classes) CHECK(cls.size() == fiber);
            CHECK(X.size() % r.quotient.size() == 0);
        }
    }
}

TEST_CASE("irreducible implies indecomposable; full-cycle diagonal implies "
          "irreducible") {
    for (int n = 2; n <= 4; ++n) {
        for (const CycleSet& X : enumerate_cyclesets(n, true)) {
            if (is_irreducible(X)) CHECK(decomposition(X).indecomposable);
            if (X.diagonal().cycle_structure().is_full_cycle)
                CHECK(is_irreducible(X));
        }
    }
}

TEST_CASE("retraction of an irreducible set is irreducible, and full-cycle "
          "diagonals push to quotients") {
    for (int n = 2; n <= 4; ++n) {
        for (const CycleSet& X : enumerate_cyclesets(n, true)) {
            CycleSet q = retract(X).quotient;
            if (is_irreducible(X) && q.size() > 1) CHECK(is_irreducible(q));
            if (X.diagonal().cycle_structure().is_full_cycle)
                CHECK(q.diagonal().cycle_structure().is_full_cycle);
        }
    }
}
