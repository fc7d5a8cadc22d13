#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klr/simples.hpp"
#include "klr/tensor.hpp"

using namespace klr;

namespace {

std::shared_ptr<Context> make(const Matrix& a) {
    auto D = CartanDatum::build(a);
    return std::make_shared<Context>(D, default_qspec(D));
}

RootCombo rc(std::vector<int> v) { return RootCombo{std::move(v)}; }

LaurentPoly q(int e) { return LaurentPoly::q(e); }

}  // namespace

TEST_CASE("tensor over the ground field is the plain tensor product") {
    auto ctx = make({{2}});
    DominantWeight lam{{2}};
    auto k = ctx->cyc(lam, rc({0}));
    auto big = ctx->cyc(lam, rc({1}));
    ActionSpace M = column_space(*big, *k, 0);
    ActionSpace N = row_space(*big, *k, 0);
    CHECK(M.graded_dim() == big->graded_dim());
    auto t = tensor_over(M, N, *k);
    CHECK(t.graded_dim == M.graded_dim() * N.graded_dim());
}

TEST_CASE("A tensor A over A is A") {
    auto a1 = make({{2}});
    auto a2 = make({{2, -1}, {-1, 2}});
    std::vector<std::shared_ptr<const CycAlgebra>> algs{
        a1->cyc(DominantWeight{{2}}, rc({1})), a1->cyc(DominantWeight{{2}}, rc({2})),
        a2->cyc(DominantWeight{{1, 1}}, rc({1, 1})), a2->cyc(DominantWeight{{1, 0}}, rc({1, 1}))};
    for (auto& A : algs) {
        auto M = regular_space(*A, ActionSpace::Side::Right);
        auto N = regular_space(*A, ActionSpace::Side::Left);
        CHECK(tensor_over(M, N, *A).graded_dim == A->graded_dim());
    }
}

TEST_CASE("tensor rejects mismatched actions") {
    auto ctx = make({{2}});
    auto A = ctx->cyc(DominantWeight{{2}}, rc({1}));
    auto B = ctx->cyc(DominantWeight{{2}}, rc({2}));
    auto M = regular_space(*A, ActionSpace::Side::Right);
    auto N = regular_space(*A, ActionSpace::Side::Left);
    CHECK_THROWS_AS(tensor_over(M, N, *B), std::invalid_argument);
    CHECK_THROWS_AS(tensor_over(N, M, *A), std::invalid_argument);
    CHECK_THROWS_AS(column_space(*B, *B, 0), std::invalid_argument);
}

TEST_CASE("F E on level one") {
    auto ctx = make({{2}});
    DominantWeight lam{{1}};
    CHECK(fe_dim(*ctx, lam, rc({1}), 0) == LaurentPoly(1));
    CHECK(fe_dim(*ctx, lam, rc({0}), 0).is_zero());
    CHECK(ef_dim(*ctx, lam, rc({1}), 0, 0).is_zero());
    CHECK(ef_dim(*ctx, lam, rc({0}), 0, 0) == LaurentPoly(1));
}

TEST_CASE("F E on level two") {
    // R(2 Lambda)(alpha) = k[x]/(x^2), one-dimensional in degrees 0 and 2
    auto ctx = make({{2}});
    DominantWeight lam{{2}};
    CHECK(fe_dim(*ctx, lam, rc({1}), 0) == (LaurentPoly(1) + q(2)) * (LaurentPoly(1) + q(2)));
    CHECK(ef_dim(*ctx, lam, rc({0}), 0, 0) == LaurentPoly(1) + q(2));
}

TEST_CASE("simple modules") {
    auto a1 = make({{2}});
    auto a2 = make({{2, -1}, {-1, 2}});
    struct Case {
        std::shared_ptr<Context> ctx;
        DominantWeight lam;
        RootCombo beta;
        int expected;
    };
    std::vector<Case> cases{
        {a1, {{1}}, rc({1}), 1}, {a1, {{1}}, rc({2}), 0},       {a1, {{2}}, rc({1}), 1},
        {a1, {{2}}, rc({2}), 1}, {a1, {{1}}, rc({0}), 1},       {a2, {{1, 0}}, rc({1, 1}), 1},
        {a2, {{1, 1}}, rc({1, 1}), 2}, {a2, {{0, 0}}, rc({0, 1}), 0}, {a1, {{3}}, rc({1}), 1},
    };
    for (auto& c : cases) {
        CAPTURE(c.beta.coeffs);
        auto A = c.ctx->cyc(c.lam, c.beta);
        auto r = count_simples(*A);
        CHECK(r.split);
        CHECK(r.count == c.expected);
        CHECK(static_cast<int>(r.idempotents.size()) == c.expected);
    }
    auto r = count_simples(*a1->cyc(DominantWeight{{2}}, rc({1})));
    CHECK(r.radical_dim == 1);
}
