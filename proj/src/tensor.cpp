#include "klr/tensor.hpp"

#include <stdexcept>

#include "klr/bimodule.hpp"

namespace klr {

ActionSpace::ActionSpace(const CycAlgebra& algebra, Side side, std::vector<Mono> basis, std::vector<int> degrees,
                         Action act)
    : algebra_(&algebra), side_(side), basis_(std::move(basis)), degrees_(std::move(degrees)), act_(std::move(act)) {
    if (basis_.size() != degrees_.size()) throw std::invalid_argument("basis and degrees differ in length");
    for (std::size_t p = 0; p < basis_.size(); ++p) index_.emplace(basis_[p], static_cast<int>(p));
}

int ActionSpace::index(const Mono& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("action leaves the space");
    return it->second;
}

LaurentPoly ActionSpace::graded_dim() const {
    LaurentPoly p;
    for (int d : degrees_) p.add_term(d, 1);
    return p;
}

ActionSpace regular_space(const CycAlgebra& A, ActionSpace::Side side) {
    std::vector<int> degrees;
    for (const Mono& m : A.basis()) degrees.push_back(A.klr().degree(m));
    const CycAlgebra* a = &A;
    ActionSpace::Action act;
    if (side == ActionSpace::Side::Right)
        act = [a](const Mono& v, const Elem& g) { return a->multiply(a->klr().elem(v), g); };
    else
        act = [a](const Mono& v, const Elem& g) { return a->multiply(g, a->klr().elem(v)); };
    return ActionSpace(A, side, A.basis(), degrees, act);
}

namespace {

void check_pair(const CycAlgebra& big, const CycAlgebra& small, int colour) {
    if (big.lambda().levels != small.lambda().levels) throw std::invalid_argument("action mismatch: weights differ");
    if (big.beta() != small.beta().plus(colour)) throw std::invalid_argument("action mismatch: roots differ");
}

}  // namespace

ActionSpace column_space(const CycAlgebra& big, const CycAlgebra& small, int colour) {
    check_pair(big, small, colour);
    const int n = big.beta().height();
    std::vector<Mono> basis;
    std::vector<int> degrees;
    for (const Mono& m : big.basis()) {
        if (m.nu[n - 1] != colour) continue;
        basis.push_back(m);
        degrees.push_back(big.klr().degree(m));
    }
    const CycAlgebra* b = &big;
    auto act = [b, colour](const Mono& v, const Elem& g) {
        return b->multiply(b->klr().elem(v), embed_iota(g, colour));
    };
    return ActionSpace(small, ActionSpace::Side::Right, basis, degrees, act);
}

ActionSpace row_space(const CycAlgebra& big, const CycAlgebra& small, int colour) {
    check_pair(big, small, colour);
    const int n = big.beta().height();
    std::vector<Mono> basis;
    std::vector<int> degrees;
    for (const Mono& m : big.basis()) {
        if (big.klr().left_idem(m)[n - 1] != colour) continue;
        basis.push_back(m);
        degrees.push_back(big.klr().degree(m));
    }
    const CycAlgebra* b = &big;
    auto act = [b, colour](const Mono& v, const Elem& g) {
        return b->multiply(embed_iota(g, colour), b->klr().elem(v));
    };
    return ActionSpace(small, ActionSpace::Side::Left, basis, degrees, act);
}

std::vector<Elem> algebra_generators(const CycAlgebra& A) {
    const KLRAlgebra& R = A.klr();
    std::vector<Elem> out;
    for (const Seq& nu : A.seqs()) {
        out.push_back(R.idem(nu));
        for (int k = 0; k < R.n(); ++k) out.push_back(R.x(k, {nu}));
        for (int l = 0; l + 1 < R.n(); ++l) out.push_back(R.tau(l, {nu}));
    }
    return out;
}

TensorProduct tensor_over(const ActionSpace& M, const ActionSpace& N, const CycAlgebra& A) {
    if (&M.algebra() != &A || &N.algebra() != &A) throw std::invalid_argument("action mismatch: different algebras");
    if (M.side() != ActionSpace::Side::Right || N.side() != ActionSpace::Side::Left)
        throw std::invalid_argument("action mismatch: need a right module and a left module");
    const KLRAlgebra& R = A.klr();
    const int sm = M.size(), sn = N.size();
    auto column = [sn](int p, int q) { return p * sn + q; };

    std::map<int, std::vector<int>> n_by_degree;
    for (int q = 0; q < sn; ++q) n_by_degree[N.degree(q)].push_back(q);

    const auto gens = algebra_generators(A);
    std::map<int, Echelon> rel;
    for (const Elem& g : gens) {
        const auto dg = R.degree(g);
        if (!dg) continue;
        std::vector<Elem> gn(sn);
        for (int q = 0; q < sn; ++q) gn[q] = N.act(N.basis()[q], g);
        for (int p = 0; p < sm; ++p) {
            const Elem mg = M.act(M.basis()[p], g);
            for (auto& [dn, qs] : n_by_degree) {
                const int d = M.degree(p) + *dg + dn;
                for (int q : qs) {
                    std::map<int, Scalar> v;
                    for (auto& [m, c] : mg.terms()) v[column(M.index(m), q)] += c;
                    for (auto& [m, c] : gn[q].terms()) v[column(p, N.index(m))] -= c;
                    SparseVec sv;
                    for (auto& [k, c] : v)
                        if (c != 0) sv.emplace_back(k, c);
                    if (!sv.empty()) rel[d].insert(sv);
                }
            }
        }
    }
    TensorProduct out;
    for (int p = 0; p < sm; ++p)
        for (int q = 0; q < sn; ++q) {
            const int d = M.degree(p) + N.degree(q);
            auto it = rel.find(d);
            if (it != rel.end() && it->second.is_pivot(column(p, q))) continue;
            out.basis[d].emplace_back(p, q);
            out.graded_dim.add_term(d, 1);
        }
    return out;
}

LaurentPoly fe_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i) {
    return fe_dim(ctx, lam, beta, i, i);
}

LaurentPoly fe_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int j) {
    if (beta.coeffs.at(i) == 0) return {};
    RootCombo mid = beta;
    --mid.coeffs[i];
    auto A = ctx.cyc(lam, mid);
    auto left = ctx.cyc(lam, mid.plus(j));
    auto right = ctx.cyc(lam, beta);
    ActionSpace M = column_space(*left, *A, j);
    ActionSpace N = row_space(*right, *A, i);
    return tensor_over(M, N, *A).graded_dim;
}

LaurentPoly ef_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int j) {
    RootCombo top = beta.plus(j);
    if (top.coeffs.at(i) == 0) return {};
    auto C = ctx.cyc(lam, top);
    const int n = top.height();
    LaurentPoly out;
    for (const Mono& m : C->basis())
        if (m.nu[n - 1] == j && C->klr().left_idem(m)[n - 1] == i) out.add_term(C->klr().degree(m), 1);
    return out;
}

}  // namespace klr
