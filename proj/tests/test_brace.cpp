#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "endocable/brace.hpp"
#include "endocable/search.hpp"

using namespace endocable;

namespace {

// Klein four-group additively (ids xor), Z_4 multiplicatively. The smallest
// brace whose additive endomorphisms are not all scalar.
Brace klein_z4_brace() {
    std::vector<std::vector<int>> add(4, std::vector<int>(4));
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            add[a][b] = a ^ b;
            mul[a][b] = (a + b) % 4;
        }
    return Brace::from_tables(std::move(add), std::move(mul));
}

}  // namespace

TEST_CASE("trivial permutation brace") {
    Brace B = Brace::permutation_brace(CycleSet::trivial(1));
    CHECK(B.size() == 1);
    CHECK(B.additive_exponent() == 1);
    CHECK(B.socle().members == std::vector<int>{0});
    CHECK(B.fix().members == std::vector<int>{0});
    CHECK(B.center().members == std::vector<int>{0});
}

TEST_CASE("permutation brace of the exceptional size-4 set") {
    CycleSet X = x4_19();
    Brace B = Brace::permutation_brace(X);
    CHECK(B.size() == 8);
    CHECK(B.socle().members == std::vector<int>{0});  // irretractable
    CHECK(B.additive_exponent() == 4);
    CHECK(X.diagonal().order() == 4);
    CHECK(B.additive_exponent() % X.diagonal().order() == 0);
    CHECK(B.fix().size() == 2);
    CHECK(B.center().size() == 2);

    // defining identity, explicitly
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(B.add(B.generator_id(x), B.generator_id(y)) ==
                  B.mul(B.generator_id(x), B.generator_id(X.op(x, y))));
    // point action identity
    for (int g = 0; g < B.size(); ++g)
        for (int x = 0; x < 4; ++x)
            CHECK(B.lam(g, B.generator_id(x)) ==
                  B.generator_id(B.perm(g)(x)));
    // words reconstruct elements additively
    for (int g = 0; g < B.size(); ++g) {
        int acc = 0;
        for (int x : B.word(g)) acc = B.add(acc, B.generator_id(x));
        CHECK(acc == g);
    }
}

TEST_CASE("axiom violations are fatal") {
    std::vector<std::vector<int>> add(4, std::vector<int>(4));
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            add[a][b] = (a + b) % 4;
            mul[a][b] = (a + 3 * b) % 4;  // 0 is no left identity
        }
    CHECK_THROWS_AS(Brace::from_tables(add, mul), BraceAxiomError);

    // two honest copies of Z_4 whose compatibility equation fails: the
    // multiplication is carried through the relabelling (2 3)
    std::vector<std::vector<int>> add2(4, std::vector<int>(4));
    std::vector<std::vector<int>> mul2(4, std::vector<int>(4));
    const int r[4] = {0, 1, 3, 2};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            add2[a][b] = (a + b) % 4;
            mul2[a][b] = r[(r[a] + r[b]) % 4];
        }
    CHECK_THROWS_AS(Brace::from_tables(add2, mul2), BraceAxiomError);
}

TEST_CASE("bk braces") {
    CHECK(Brace::bk(0).size() == 1);

    Brace b2 = Brace::bk(2);
    CHECK(b2.mul(1, 1) == 0);
    CHECK(b2.multiplicative_order(1) == 2);

    Brace b3 = Brace::bk(3);
    CHECK(b3.additive_exponent() == 8);
    std::vector<int> involutions;
    for (int a = 0; a < 8; ++a)
        if (b3.multiplicative_order(a) <= 2) involutions.push_back(a);
    CHECK(involutions == std::vector<int>{0, 1, 4, 5});

    CHECK_THROWS_AS(Brace::bk(13), CapExceededError);
}

TEST_CASE("bk multiplicative structure splits as <1>o x <2>+") {
    for (int k = 2; k <= 5; ++k) {
        Brace b = Brace::bk(k);
        const int m = b.size();
        std::vector<int> one = b.multiplicative_span({1});
        CHECK(one == std::vector<int>{0, 1});
        std::vector<int> evens = b.additive_span({2});
        CHECK(static_cast<int>(evens.size()) == m / 2);
        CHECK(b.is_multiplicative_subgroup(evens));

        // direct product: the pairwise products cover the brace exactly once
        std::set<int> products;
        for (int u : one)
            for (int w : evens) products.insert(b.mul(u, w));
        CHECK(static_cast<int>(products.size()) == m);

        // <2>+ is multiplicatively cyclic of order 2^(k-1)
        bool cyclic = false;
        for (int w : evens)
            if (b.multiplicative_span({w}) == evens) cyclic = true;
        CHECK(cyclic);
    }
}

TEST_CASE("central involutions generate bk subbraces") {
    Brace b3 = Brace::bk(3);
    auto whole = central_involution_subbrace(b3, 1);
    CHECK(whole.k == 3);
    CHECK(whole.members.size() == 8);

    auto trivial = central_involution_subbrace(b3, 0);
    CHECK(trivial.k == 0);

    Brace B = Brace::permutation_brace(x4_19());
    for (int z : B.center().members) {
        if (z == 0 || B.multiplicative_order(z) != 2) continue;
        auto sub = central_involution_subbrace(B, z);
        CHECK((1 << sub.k) == B.additive_order(z));
        CHECK(B.is_subbrace(sub.members));
    }

    CHECK_THROWS_AS(central_involution_subbrace(b3, 2), NotInvolutionError);
    // non-central candidate in a nonabelian brace
    Brace D = Brace::permutation_brace(x4_19());
    bool threw = false;
    for (int g = 0; g < D.size(); ++g) {
        bool central = true;
        for (int h = 0; h < D.size(); ++h)
            if (D.mul(g, h) != D.mul(h, g)) central = false;
        if (!central && D.mul(g, g) == 0) {
            CHECK_THROWS_AS(central_involution_subbrace(D, g), NotCentralError);
            threw = true;
            break;
        }
    }
    CHECK(threw);
}

TEST_CASE("socle, fix, center on small braces") {
    Brace b3 = Brace::bk(3);
    // abelian multiplication: everything is central
    CHECK(b3.center().members.size() == 8);
    CHECK(b3.fix().size() >= 2);  // 2-brace: nontrivial fix

    Brace B = Brace::permutation_brace(x4_19());
    // center and fix meet only inside the socle
    auto soc = B.socle();
    for (int z : B.center().members)
        if (std::binary_search(B.fix().members.begin(), B.fix().members.end(), z))
            CHECK(soc.contains(z));
}

TEST_CASE("primary components") {
    Brace B = Brace::permutation_brace(x4_19());
    CHECK(B.primary_component({2}).members.size() == 8);
    CHECK(B.primary_component({}).members == std::vector<int>{0});
    CHECK(B.primary_component({3}).members == std::vector<int>{0});
}

TEST_CASE("relative fix") {
    Brace B = Brace::permutation_brace(x4_19());
    BraceSubset zero{{0}, BraceSubsetKind::LeftIdeal};
    CHECK(B.relative_fix(zero).members.size() == static_cast<std::size_t>(B.size()));

    BraceSubset whole{{}, BraceSubsetKind::LeftIdeal};
    for (int g = 0; g < B.size(); ++g) whole.members.push_back(g);
    CHECK(B.relative_fix(whole).members == B.fix().members);

    // a subset that is no left ideal
    BraceSubset bogus{{0, 1}, BraceSubsetKind::LeftIdeal};
    if (!B.is_left_ideal(bogus.members))
        CHECK_THROWS_AS(B.relative_fix(bogus), NotALeftIdealError);
}

TEST_CASE("fix elements act by multiplicative conjugation") {
    Brace B = Brace::permutation_brace(x4_19());
    for (int f : B.fix().members)
        for (int g = 0; g < B.size(); ++g)
            CHECK(B.lam(f, g) == B.mul(B.mul(f, g), B.inv(f)));
}

TEST_CASE("brace to cycle set") {
    CHECK(Brace::permutation_brace(CycleSet::trivial(1)).to_cycleset().size() == 1);

    Brace b2 = Brace::bk(2);
    CycleSet Y = b2.to_cycleset();
    CHECK(Y.size() == 4);

    Brace B = Brace::permutation_brace(CycleSet::trivial(3));
    CycleSet Z = B.to_cycleset();
    for (int g : B.socle().members) CHECK(Z.sigma(g).is_identity());
}

TEST_CASE("cyclic centralizing") {
    Brace B = Brace::permutation_brace(x4_19());
    // a = 0 centralizes everything
    for (int b = 0; b < B.size(); ++b)
        CHECK_NOTHROW(check_cyclic_centralizing(B, 0, b));

    // abelian multiplicative group: hypothesis and conclusion always hold
    Brace b3 = Brace::bk(3);
    for (int a = 0; a < b3.size(); ++a)
        for (int b = 0; b < b3.size(); ++b)
            CHECK_NOTHROW(check_cyclic_centralizing(b3, a, b));

    // some pair violating the hypothesis exists in this nonabelian brace
    bool found = false;
    for (int a = 1; a < B.size() && !found; ++a) {
        for (int b = 1; b < B.size() && !found; ++b) {
            try {
                check_cyclic_centralizing(B, a, b);
            } catch (const HypothesisFailsError&) {
                found = true;
            }
        }
    }
    CHECK(found);

    // pairs meeting the hypothesis never violate the conclusion
    for (int a = 0; a < B.size(); ++a) {
        for (int b = 0; b < B.size(); ++b) {
            try {
                check_cyclic_centralizing(B, a, b);
            } catch (const HypothesisFailsError&) {
            }
        }
    }
}

TEST_CASE("scalar and power arithmetic") {
    Brace b3 = Brace::bk(3);
    CHECK(b3.scalar(0, 5) == 0);
    CHECK(b3.scalar(8, 5) == 0);
    CHECK(b3.scalar(-1, 3) == b3.neg(3));
    CHECK(b3.power(-1, 3) == b3.inv(3));
    for (int a = 0; a < 8; ++a) CHECK(b3.add(a, b3.neg(a)) == 0);
}

TEST_CASE("lazy row evaluation matches dense tables") {
    CycleSet X = x4_19();
    Brace dense = Brace::permutation_brace(X);
    Brace lazy = Brace::permutation_brace(X, PermGroup::kDefaultCap, {}, 1);
    REQUIRE(lazy.size() == dense.size());
    CHECK_FALSE(lazy.is_dense());
    for (int a = 0; a < dense.size(); ++a) {
        CHECK(lazy.neg(a) == dense.neg(a));
        CHECK(lazy.inv(a) == dense.inv(a));
        for (int b = 0; b < dense.size(); ++b) {
            CHECK(lazy.add(a, b) == dense.add(a, b));
            CHECK(lazy.mul(a, b) == dense.mul(a, b));
            CHECK(lazy.lam(a, b) == dense.lam(a, b));
        }
    }
    CHECK(lazy.socle().members == dense.socle().members);
    CHECK(lazy.additive_exponent() == dense.additive_exponent());
}

TEST_CASE("from_tables brace without realization: klein/z4") {
    Brace B = klein_z4_brace();
    CHECK(B.size() == 4);
    CHECK_FALSE(B.has_perm_realization());
    CHECK(B.additive_exponent() == 2);
    CHECK(B.multiplicative_order(1) == 4);
    CHECK(B.lam(1, 1) == 3);  // lambda_1 swaps 1 and 3
    CHECK(B.lam(1, 3) == 1);
    CHECK(B.lam(1, 2) == 2);
}

TEST_CASE("serialized tables round through from_tables") {
    Brace B = Brace::bk(2);
    std::string s = B.serialize();
    std::istringstream is(s);
    int n;
    is >> n;
    REQUIRE(n == 4);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)),
        mul(n, std::vector<int>(n));
    for (auto& row : add)
        for (auto& v : row) is >> v;
    for (auto& row : mul)
        for (auto& v : row) is >> v;
    Brace C = Brace::from_tables(add, mul);
    CHECK(C.size() == 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(C.add(a, b) == B.add(a, b));
            CHECK(C.mul(a, b) == B.mul(a, b));
        }
}
