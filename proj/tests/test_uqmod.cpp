#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/uqmod.hpp"

using namespace klr;

namespace {

CartanDatum a1() { return CartanDatum::build({{2}}); }
CartanDatum a2() { return CartanDatum::build({{2, -1}, {-1, 2}}); }
CartanDatum b2() { return CartanDatum::build({{2, -2}, {-1, 2}}); }

RootCombo rc(std::vector<int> v) { return RootCombo{std::move(v)}; }
LaurentPoly q(int e) { return LaurentPoly::q(e); }

// V(m) for sl2 has weights m, m-2, ..., -m
int a1_weight_dim(int m, int n) { return n <= m ? 1 : 0; }

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0) == LaurentPoly());
    CHECK(quantum_integer(1) == LaurentPoly(1));
    CHECK(quantum_integer(2) == q(1) + q(-1));
    CHECK(quantum_integer(3, 2) == q(4) + LaurentPoly(1) + q(-4));
    CHECK(quantum_integer(-2) == -(q(1) + q(-1)));
}

TEST_CASE("e action") {
    auto D = a1();
    CHECK(e_action(D, DominantWeight{{3}}, 0, {}).empty());
    auto r = e_action(D, DominantWeight{{2}}, 0, {0});
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->second == quantum_integer(2));
    CHECK(e_action(a2(), DominantWeight{{1, 0}}, 1, {0}).empty());
    // e f f v = ([m-2] + [m]) f v
    auto s = e_action(D, DominantWeight{{3}}, 0, {0, 0});
    REQUIRE(s.size() == 1);
    CHECK(s.begin()->second == quantum_integer(1) + quantum_integer(3));
}

TEST_CASE("Gram matrices") {
    auto D = a1();
    CHECK(gram(D, DominantWeight{{2}}, rc({0})) == GramMatrix{{LaurentPoly(1)}});
    CHECK(gram(D, DominantWeight{{2}}, rc({1})) == GramMatrix{{q(1) + q(-1)}});
    CHECK(gram(D, DominantWeight{{1}}, rc({2})) == GramMatrix{{LaurentPoly()}});
    // (f^n v, f^n v) = prod_{k=1}^n [k][m-k+1]
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            LaurentPoly expect(1);
            for (int k = 1; k <= n; ++k) expect = expect * quantum_integer(k) * quantum_integer(m - k + 1);
            auto g = gram(D, DominantWeight{{m}}, rc({n}));
            CHECK(g[0][0] == expect);
            CHECK(laurent_rank(g) == a1_weight_dim(m, n));
        }
}

TEST_CASE("Gram symmetry and rank") {
    for (auto D : {a2(), b2()}) {
        ShapovalovForm F(D, DominantWeight{{1, 1}});
        for (auto beta : {rc({1, 1}), rc({2, 1}), rc({1, 2}), rc({2, 2})}) {
            auto g = F.gram(beta);
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b) CHECK(g[a][b] == g[b][a]);
            // reversing the index order leaves the rank alone
            GramMatrix r(g.rbegin(), g.rend());
            CHECK(laurent_rank(r) == laurent_rank(g));
        }
    }
}

TEST_CASE("weight dimensions") {
    auto A2 = a2();
    CHECK(weight_dim(A2, DominantWeight{{1, 0}}, rc({0, 0})) == 1);
    CHECK(weight_dim(A2, DominantWeight{{1, 0}}, rc({1, 0})) == 1);
    CHECK(weight_dim(A2, DominantWeight{{1, 0}}, rc({1, 1})) == 1);
    CHECK(weight_dim(A2, DominantWeight{{1, 0}}, rc({0, 1})) == 0);
    CHECK(weight_dim(A2, DominantWeight{{1, 0}}, rc({2, 1})) == 0);
    // adjoint representation: 8 = 1 + 1 + 1 + 2 + 1 + 1 + 1
    CHECK(weight_dim(A2, DominantWeight{{1, 1}}, rc({1, 1})) == 2);
    int total = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) total += weight_dim(A2, DominantWeight{{1, 1}}, rc({a, b}));
    CHECK(total == 8);
    // B2 spin and vector representations
    auto B2 = b2();
    int spin = 0, vec = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            spin += weight_dim(B2, DominantWeight{{0, 1}}, rc({a, b}));
            vec += weight_dim(B2, DominantWeight{{1, 0}}, rc({a, b}));
        }
    CHECK(spin + vec == 9);
}

TEST_CASE("predicted dimensions") {
    auto D = a1();
    CHECK(predicted_dim(D, DominantWeight{{2}}, {0}, {0}) == LaurentPoly(1) + q(2));
    CHECK(predicted_dim(D, DominantWeight{{2}}, {}, {}) == LaurentPoly(1));
    CHECK(predicted_dim(D, DominantWeight{{1}}, {0, 0}, {0, 0}).is_zero());
    CHECK_THROWS_AS(predicted_dim(a2(), DominantWeight{{1, 0}}, {0}, {1}), std::invalid_argument);
}
