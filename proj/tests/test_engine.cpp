#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "klr/klr.hpp"

using namespace klr;

namespace {

CartanDatum a1() { return CartanDatum::build({{2}}, {"i"}); }
CartanDatum a2() { return CartanDatum::build({{2, -1}, {-1, 2}}); }
CartanDatum aff() { return CartanDatum::build({{2, -2}, {-2, 2}}, {"0", "1"}); }

KLRAlgebra alg(const CartanDatum& d, int n) { return KLRAlgebra(d, default_qspec(d), n); }

Elem poly_elem(const KLRAlgebra& R, const Poly& p, const Seq& nu) { return R.from_poly(p, nu); }

Seq S(std::initializer_list<int> v) { return make_seq(std::vector<int>(v)); }

}  // namespace

TEST_CASE("monomial degrees") {
    auto R1 = alg(a1(), 1);
    CHECK(R1.degree(Mono{0, S({0}), unit_exps(0)}) == 2);
    auto R2 = alg(a1(), 2);
    int s1 = R2.perms().from_word({0});
    CHECK(R2.degree(Mono{static_cast<std::uint16_t>(s1), S({0, 0}), {}}) == -2);
    auto A2 = alg(a2(), 2);
    CHECK(A2.degree(Mono{static_cast<std::uint16_t>(s1), S({0, 1}), {}}) == 1);
}

TEST_CASE("products from the defining relations") {
    auto R = alg(a1(), 2);
    std::vector<Seq> ii{S({0, 0})};
    Elem t = R.tau(0, ii), x1 = R.x(0, ii), x2 = R.x(1, ii), e = R.unit(ii);
    CHECK(R.multiply(t, t).is_zero());
    CHECK(R.multiply(t, x1) == R.multiply(x2, t) - e);
    CHECK(R.format(R.multiply(t, x1)) == "t(1)x1e(i,i)");
    CHECK(R.format(R.multiply(x2, t)) == "e(i,i) + t(1)x1e(i,i)");

    auto A = alg(a2(), 2);
    Elem t12 = A.tau(0, {S({0, 1})}), t21 = A.tau(0, {S({1, 0})});
    // tau_1 e(12) tau_1 e(21) = tau_1^2 e(21)
    Elem expect = A.x(0, {S({1, 0})}) + A.x(1, {S({1, 0})});
    CHECK(A.multiply(t12, t21) == expect);
    CHECK(A.multiply(A.idem(S({1, 0})), t12) == t12);
    CHECK(A.multiply(t21, t21).is_zero());
}

TEST_CASE("psi") {
    auto R = alg(a1(), 2);
    std::vector<Seq> ii{S({0, 0})};
    CHECK(R.psi(R.unit(ii)) == R.unit(ii));
    Elem tx2 = R.multiply(R.tau(0, ii), R.x(1, ii));
    Elem expect = R.multiply(R.x(1, ii), R.tau(0, ii));
    CHECK(R.psi(tx2) == expect);
    // tau_1 x_1 e(ii) + e(ii)
    int s1 = R.perms().from_word({0});
    Elem lit = R.elem(Mono{static_cast<std::uint16_t>(s1), S({0, 0}), unit_exps(0)}) + R.unit(ii);
    CHECK(R.psi(tx2) == lit);

    auto A = alg(a2(), 3);
    std::mt19937 rng(7);
    auto seqs = A.all_sequences();
    for (int rep = 0; rep < 40; ++rep) {
        Mono m{static_cast<std::uint16_t>(rng() % A.perms().size()), seqs[rng() % seqs.size()], {}};
        for (int k = 0; k < 3; ++k) m.a[k] = rng() % 3;
        Elem e = A.elem(m, 3) + A.elem(Mono{0, m.nu, unit_exps(1, 2)}, -1);
        CHECK(A.psi(A.psi(e)) == e);
        CHECK(A.degree(A.psi(A.elem(m))) == A.degree(m));
    }
}

namespace {

void check_relations(const KLRAlgebra& R) {
    const int n = R.n();
    auto seqs = R.all_sequences();
    Elem one = R.unit(seqs);
    for (auto& nu : seqs)
        for (auto& mu : seqs) {
            Elem p = R.multiply(R.idem(nu), R.idem(mu));
            CHECK(p == (nu == mu ? R.idem(nu) : Elem(n)));
        }
    for (int k = 0; k < n; ++k) {
        Elem xk = R.x(k, seqs);
        CHECK(R.multiply(one, xk) == xk);
        CHECK(R.multiply(xk, one) == xk);
        for (int l = 0; l < n; ++l) CHECK(R.multiply(xk, R.x(l, seqs)) == R.multiply(R.x(l, seqs), xk));
        for (auto& nu : seqs) CHECK(R.multiply(xk, R.idem(nu)) == R.multiply(R.idem(nu), xk));
    }
    for (int l = 0; l + 1 < n; ++l) {
        Elem tl = R.tau(l, seqs);
        CHECK(R.multiply(one, tl) == tl);
        CHECK(R.multiply(tl, one) == tl);
        for (int k = 0; k + 1 < n; ++k)
            if (std::abs(k - l) > 1) CHECK(R.multiply(tl, R.tau(k, seqs)) == R.multiply(R.tau(k, seqs), tl));
        for (auto& nu : seqs) {
            Seq snu = nu;
            std::swap(snu[l], snu[l + 1]);
            CHECK(R.multiply(tl, R.idem(nu)) == R.multiply(R.idem(snu), tl));
            Elem sq = R.multiply(R.multiply(tl, tl), R.idem(nu));
            CHECK(sq == R.from_poly(R.q_poly(nu[l], nu[l + 1], l, l + 1), nu));
            for (int k = 0; k < n; ++k) {
                int sk = k == l ? l + 1 : (k == l + 1 ? l : k);
                Elem lhs = R.multiply(R.multiply(tl, R.x(k, seqs)), R.idem(nu)) -
                           R.multiply(R.multiply(R.x(sk, seqs), tl), R.idem(nu));
                Elem rhs(n);
                if (nu[l] == nu[l + 1] && k == l) rhs = -R.idem(nu);
                if (nu[l] == nu[l + 1] && k == l + 1) rhs = R.idem(nu);
                CHECK(lhs == rhs);
            }
            if (l + 2 < n) {
                Elem t1 = R.tau(l + 1, seqs);
                Elem lhs = R.multiply(R.multiply(R.multiply(t1, tl), t1), R.idem(nu)) -
                           R.multiply(R.multiply(R.multiply(tl, t1), tl), R.idem(nu));
                Elem rhs(n);
                if (nu[l] == nu[l + 2]) {
                    // (Q(x_l,x_{l+1}) - Q(x_{l+2},x_{l+1})) / (x_l - x_{l+2}) by explicit division
                    Poly num = R.q_poly(nu[l], nu[l + 1], l, l + 1);
                    for (auto& [e, c] : R.q_poly(nu[l + 2], nu[l + 1], l + 2, l + 1)) poly_add(num, e, -c);
                    Poly quot;
                    while (!num.empty()) {
                        auto it = std::prev(num.end());
                        Exps e = it->first;
                        Scalar c = it->second;
                        REQUIRE(e[l] > 0);
                        Exps qe = e;
                        --qe[l];
                        poly_add(quot, qe, c);
                        poly_add(num, e, -c);
                        Exps e2 = qe;
                        ++e2[l + 2];
                        poly_add(num, e2, c);
                    }
                    rhs = R.from_poly(quot, nu);
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

}  // namespace

TEST_CASE("defining relations A2") {
    for (int n = 1; n <= 3; ++n) check_relations(alg(a2(), n));
}

TEST_CASE("defining relations affine A1") {
    for (int n = 1; n <= 3; ++n) check_relations(alg(aff(), n));
}

TEST_CASE("far commutation at four strands") {
    auto R = alg(a2(), 4);
    auto seqs = R.all_sequences();
    CHECK(R.multiply(R.tau(0, seqs), R.tau(2, seqs)) == R.multiply(R.tau(2, seqs), R.tau(0, seqs)));
}

TEST_CASE("associativity on random monomials") {
    for (auto d : {a1(), a2(), aff()}) {
        auto R = alg(d, 3);
        auto seqs = R.all_sequences();
        std::mt19937 rng(11);
        auto rand_mono = [&](const Seq& nu) {
            Mono m{static_cast<std::uint16_t>(rng() % R.perms().size()), nu, {}};
            for (int k = 0; k < 3; ++k) m.a[k] = rng() % 3;
            return m;
        };
        for (int rep = 0; rep < 30; ++rep) {
            Mono c = rand_mono(seqs[rng() % seqs.size()]);
            Mono b = rand_mono(R.left_idem(c));
            Mono a = rand_mono(R.left_idem(b));
            Elem ab = R.multiply(R.elem(a), R.elem(b));
            Elem bc = R.multiply(R.elem(b), R.elem(c));
            Elem lhs = R.multiply(ab, R.elem(c));
            CHECK(lhs == R.multiply(R.elem(a), bc));
            if (!lhs.is_zero()) CHECK(R.degree(lhs) == R.degree(a) + R.degree(b) + R.degree(c));
        }
    }
}

TEST_CASE("basis monomials") {
    auto R1 = alg(a1(), 1);
    auto b = R1.basis_monomials(RootCombo{{1}}, 0);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Mono{0, S({0}), {}});
    CHECK(R1.basis_monomials(RootCombo{{1}}, 1).empty());
    auto R2 = alg(a1(), 2);
    auto c = R2.basis_monomials(RootCombo{{2}}, -2);
    REQUIRE(c.size() == 1);
    CHECK(R2.perms().word(c[0].w) == Word{0});
    auto all = R2.basis_monomials(RootCombo{{2}}, 4);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("intertwiners") {
    auto R = alg(a1(), 2);
    std::vector<Seq> ii{S({0, 0})};
    Elem g = R.intertwiner(0, ii);
    Poly d;
    poly_add(d, unit_exps(1), 1);
    poly_add(d, unit_exps(0), -1);
    Elem expect = R.from_poly(d, ii[0]) - R.left_poly(poly_mul(d, d), R.tau(0, ii));
    CHECK(g == expect);
    auto A = alg(a2(), 2);
    int s1 = A.perms().from_word({0});
    Elem gA = A.intertwiner(0, A.all_sequences());
    CHECK(gA.coeff(Mono{static_cast<std::uint16_t>(s1), S({0, 1}), {}}) == 1);
    CHECK_THROWS(A.intertwiner(1, A.all_sequences()));

    for (auto dat : {a1(), a2()}) {
        for (int n = 2; n <= 3; ++n) {
            auto Rn = alg(dat, n);
            auto seqs = Rn.all_sequences();
            for (int a = 0; a + 1 < n; ++a) {
                Elem ga = Rn.intertwiner(a, seqs);
                for (int b2 = 0; b2 < n; ++b2) {
                    int sb = b2 == a ? a + 1 : (b2 == a + 1 ? a : b2);
                    CHECK(Rn.multiply(Rn.x(sb, seqs), ga) == Rn.multiply(ga, Rn.x(b2, seqs)));
                }
                if (a + 2 < n) {
                    Elem ga1 = Rn.intertwiner(a + 1, seqs);
                    Elem lhs = Rn.multiply(Rn.tau(a, seqs), Rn.multiply(ga1, ga));
                    Elem rhs = Rn.multiply(Rn.multiply(ga1, ga), Rn.tau(a + 1, seqs));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("cyclotomic polynomial element") {
    auto R1 = alg(a1(), 1);
    Elem c = R1.cyc_poly(DominantWeight{{2}}, 0, {S({0})});
    CHECK(c == R1.elem(Mono{0, S({0}), unit_exps(0, 2)}));
    auto A = alg(a2(), 2);
    auto seqs = A.all_sequences();
    CHECK(A.cyc_poly(DominantWeight{{0, 0}}, 0, seqs) == A.unit(seqs));
    CHECK(A.cyc_poly(DominantWeight{{1, 1}}, 0, seqs) == A.x(0, seqs));
}

TEST_CASE("strand count mismatch") {
    auto R2 = alg(a1(), 2);
    auto R3 = alg(a1(), 3);
    Elem a = R2.unit({S({0, 0})});
    Elem b = R3.unit({S({0, 0, 0})});
    CHECK_THROWS_AS(R2.multiply(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}
