#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/bimodule.hpp"

using namespace klr;
using Kind = GradedBimodule::Kind;

namespace {

std::shared_ptr<Context> make(const Matrix& a) {
    auto D = CartanDatum::build(a);
    return std::make_shared<Context>(D, default_qspec(D));
}
std::shared_ptr<Context> a1() { return make({{2}}); }
std::shared_ptr<Context> a2() { return make({{2, -1}, {-1, 2}}); }

RootCombo rc(std::vector<int> v) { return RootCombo{std::move(v)}; }

// dim of R e(col) / (two-sided generated kernel) in degree d, from the
// bilinear span b1 * c * embed(b2) over all basis monomials.
int direct_kernel_dim(const Context& ctx, Kind kind, const DominantWeight& lam, const RootCombo& beta, int i, int d) {
    const int n = beta.height();
    auto R = ctx.klr(n + 1);
    auto S = ctx.klr(n);
    RootCombo up = beta.plus(i);
    const int pos = kind == Kind::K1 ? 0 : n;
    std::vector<Mono> cols;
    for (const Mono& m : R->basis_monomials(up, d))
        if (m.nu[pos] == i) cols.push_back(m);
    std::map<Mono, int> index;
    for (std::size_t p = 0; p < cols.size(); ++p) index.emplace(cols[p], static_cast<int>(p));
    if (n == 0) return static_cast<int>(cols.size());

    Echelon span;
    const int rlo = R->crossing_degree_range(up).first;
    const int slo = S->crossing_degree_range(beta).first;
    auto seqs = R->sequences(up);
    std::vector<Seq> colseqs;
    for (auto& s : seqs)
        if (s[pos] == i) colseqs.push_back(s);
    Elem c = R->cyc_poly(lam, kind == Kind::K1 ? 1 : 0, colseqs);
    std::map<Seq, std::pair<int, Elem>> parts;
    for (auto& [m, k] : c.terms()) parts[m.nu] = {R->degree(m), R->elem(m, k)};
    for (auto& [nu, part] : parts) {
        auto [dc, ce] = part;
        for (int d1 = rlo; d1 + dc + slo <= d; ++d1) {
            const int d2 = d - d1 - dc;
            auto left = R->basis_monomials(up, d1);
            auto right = S->basis_monomials(beta, d2);
            for (const Mono& b1 : left) {
                if (b1.nu != nu) continue;
                Elem lc = R->multiply(R->elem(b1), ce);
                for (const Mono& b2 : right) {
                    Mono e2 = kind == Kind::K1 ? embed_xi(b2, n, i) : embed_iota(b2, n, i);
                    if (R->left_idem(e2) != nu) continue;
                    Elem prod = R->multiply(lc, R->elem(e2));
                    SparseVec v;
                    for (auto& [m, k] : prod.terms()) v.emplace_back(index.at(m), k);
                    span.insert(v);
                }
            }
        }
    }
    return static_cast<int>(cols.size()) - span.rank();
}

int rank_of(const DenseMatrix& m) { return m.empty() ? 0 : dense_rank(m); }

}  // namespace

static auto a1_ctx = a1();
static auto a2_ctx = a2();

TEST_CASE("embeddings") {
    auto& ctx = *a2_ctx;
    auto R2 = ctx.klr(2);
    Mono t = R2->mono(1, unit_exps(0), make_seq({0, 1}));
    Mono up = embed_iota(t, 2, 1, 3);
    CHECK(ctx.klr(3)->format(up) == "t(1)x1x3^3e(1,2,2)");
    Mono sh = embed_xi(t, 2, 0);
    CHECK(ctx.klr(3)->format(sh) == "t(2)x2e(1,1,2)");
}

TEST_CASE("bimodules at beta = 0") {
    auto& ctx = *a1_ctx;
    for (int m = 1; m <= 3; ++m) {
        DominantWeight lam{{m}};
        const int D = default_window(ctx, lam, rc({0}), 0);
        auto t = build_bimodules(ctx, lam, rc({0}), 0, D);
        LaurentPoly k0, f, k1;
        for (int e = 0; 2 * e <= D; ++e) k0.add_term(2 * e, 1);
        for (int e = 0; e < m; ++e) f.add_term(2 * e, 1);
        for (int e = 0; 2 * e <= D - 2 * m; ++e) k1.add_term(2 * e, 1);
        CHECK(t.K0->graded_dim() == k0);
        CHECK(t.F->graded_dim() == f);
        CHECK(t.K1->graded_dim() == k1);
        auto P = map_P(*t.K1, *t.K0);
        CHECK(P.shift == 2 * m);
        auto R = ctx.klr(1);
        Elem unit = R->idem(make_seq({0}));
        CHECK(P(unit) == R->elem(R->mono(0, unit_exps(0, m), make_seq({0}))));
    }
}

TEST_CASE("kernel dimensions agree with the bilinear span") {
    struct Case {
        std::shared_ptr<Context> ctx;
        DominantWeight lam;
        RootCombo beta;
        int i;
    };
    std::vector<Case> cases{
        {a1(), {{1}}, rc({1}), 0}, {a1(), {{2}}, rc({1}), 0}, {a2(), {{1, 0}}, rc({1, 0}), 1},
        {a2(), {{1, 0}}, rc({1, 0}), 0}, {a2(), {{1, 1}}, rc({0, 1}), 0}, {a1(), {{1}}, rc({2}), 0},
    };
    for (auto& c : cases) {
        const int D = default_window(*c.ctx, c.lam, c.beta, c.i);
        for (Kind kind : {Kind::K0, Kind::K1}) {
            GradedBimodule M(*c.ctx, kind, c.lam, c.beta, c.i, D);
            const int lo = c.ctx->klr(c.beta.height() + 1)->crossing_degree_range(c.beta.plus(c.i)).first;
            for (int d = lo; d <= D; ++d) {
                CAPTURE(d);
                CHECK(M.dim(d) == direct_kernel_dim(*c.ctx, kind, c.lam, c.beta, c.i, d));
            }
        }
    }
}

TEST_CASE("F is the column of the cyclotomic quotient") {
    auto& ctx = *a1_ctx;
    DominantWeight lam{{1}};
    GradedBimodule F(ctx, Kind::F, lam, rc({1}), 0, default_window(ctx, lam, rc({1}), 0));
    CHECK(F.graded_dim().is_zero());
    CHECK_THROWS_AS(GradedBimodule(ctx, Kind::F, DominantWeight{{3}}, rc({0}), 0, 2), std::invalid_argument);
}

TEST_CASE("exact sequence on small cases") {
    struct Case {
        std::shared_ptr<Context> ctx;
        DominantWeight lam;
        RootCombo beta;
        int i;
    };
    std::vector<Case> cases{
        {a1(), {{1}}, rc({1}), 0}, {a1(), {{2}}, rc({1}), 0}, {a1(), {{2}}, rc({2}), 0},
        {a2(), {{1, 0}}, rc({1, 0}), 1}, {a2(), {{1, 0}}, rc({0, 1}), 0}, {a1(), {{0}}, rc({0}), 0},
    };
    for (auto& c : cases) {
        const int D = default_window(*c.ctx, c.lam, c.beta, c.i);
        auto t = build_bimodules(*c.ctx, c.lam, c.beta, c.i, D);
        auto P = map_P(*t.K1, *t.K0);
        auto pi = map_pi(*t.K0, *t.F);
        CHECK(P.shift == shift_P(c.ctx->datum(), c.lam, c.beta, c.i));
        for (int d = t.K0->min_degree() - 2; d <= D; ++d) {
            CAPTURE(d);
            const int dk1 = t.K1->dim(d - P.shift);
            auto Pm = P.matrix(d - P.shift);
            auto pim = pi.matrix(d);
            CHECK(rank_of(Pm) == dk1);
            CHECK(rank_of(pim) == t.F->dim(d));
            CHECK(t.K0->dim(d) == t.F->dim(d) + dk1);
            for (auto& row : Pm) {
                Elem v = t.K0->from_coords(row, d);
                CHECK(pi(v).is_zero());
            }
        }
    }
}

TEST_CASE("Q after P and P after Q") {
    struct Case {
        std::shared_ptr<Context> ctx;
        DominantWeight lam;
        RootCombo beta;
        int i;
    };
    std::vector<Case> cases{
        {a1(), {{1}}, rc({1}), 0}, {a1(), {{2}}, rc({1}), 0}, {a2(), {{1, 0}}, rc({1, 0}), 1},
        {a2(), {{1, 0}}, rc({0, 1}), 0}, {a2(), {{1, 1}}, rc({1, 1}), 0},
    };
    for (auto& c : cases) {
        const int D = default_window(*c.ctx, c.lam, c.beta, c.i);
        auto t = build_bimodules(*c.ctx, c.lam, c.beta, c.i, D);
        auto P = map_P(*t.K1, *t.K0);
        auto Q = map_Q(*t.K0, *t.K1);
        const KLRAlgebra& R = t.K0->klr();
        auto A = right_multiplication(*t.K1, element_A(R, c.lam, c.beta, c.i), P.shift + Q.shift);
        auto B = right_multiplication(*t.K0, element_B(R, c.lam, c.beta, c.i), P.shift + Q.shift);
        int checked = 0;
        for (const Mono& m : t.K1->basis()) {
            int d = R.degree(m);
            if (!A.defined_at(d)) continue;
            Elem v = R.elem(m);
            CHECK(Q(P(v)) == A(v));
            ++checked;
        }
        for (const Mono& m : t.K0->basis()) {
            int d = R.degree(m);
            if (!B.defined_at(d) || !Q.defined_at(d)) continue;
            Elem v = R.elem(m);
            CHECK(P(Q(v)) == B(v));
            ++checked;
        }
        CHECK((checked > 0 || t.K0->basis().empty()));
    }
}

TEST_CASE("taug congruence") {
    struct Case {
        std::shared_ptr<Context> ctx;
        DominantWeight lam;
        RootCombo beta;
        int i;
    };
    std::vector<Case> cases{
        {a1(), {{1}}, rc({0}), 0}, {a1(), {{1}}, rc({1}), 0}, {a1(), {{2}}, rc({1}), 0},
        {a2(), {{1, 0}}, rc({0, 1}), 0}, {a2(), {{1, 0}}, rc({1, 0}), 1},
    };
    for (auto& c : cases) {
        const int n = c.beta.height();
        auto R = c.ctx->klr(n + 1);
        Elem A = element_A(*R, c.lam, c.beta, c.i);
        const int degA = *R->degree(A);
        GradedBimodule K1(*c.ctx, Kind::K1, c.lam, c.beta, c.i, degA);
        for (const Seq& nu : c.ctx->klr(n)->sequences(c.beta)) {
            Elem diff = taug_difference(*R, c.lam, nu, c.i);
            CHECK(K1.is_zero(diff));
            if (n == 0) CHECK(diff.is_zero());
        }
    }
}

TEST_CASE("right action factors through the cyclotomic quotient") {
    auto& ctx = *a2_ctx;
    DominantWeight lam{{1, 0}};
    RootCombo beta = rc({1, 1});
    GradedBimodule K0(ctx, Kind::K0, lam, beta, 0, 6);
    GradedBimodule K1(ctx, Kind::K1, lam, beta, 0, 6);
    const CycAlgebra& base = K0.base();
    for (const Elem& g : base.ideal_relations()) {
        for (const Mono& m : K0.basis()) {
            Elem v = K0.klr().elem(m);
            Elem prod = K0.right_act(v, g);
            if (prod.is_zero() || *K0.klr().degree(prod) > 6) continue;
            CHECK(K0.is_zero(prod));
        }
        for (const Mono& m : K1.basis()) {
            Elem v = K1.klr().elem(m);
            Elem prod = K1.right_act(v, g);
            if (prod.is_zero() || *K1.klr().degree(prod) > 6) continue;
            CHECK(K1.is_zero(prod));
        }
    }
}
