#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klr/context.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/laurent.hpp"

namespace klr {

// A graded space with a basis of reduced monomials of some ambient KLR algebra
// and a one-sided action of a cyclotomic quotient.
class ActionSpace {
public:
    enum class Side { Left, Right };
    using Action = std::function<Elem(const Mono& v, const Elem& a)>;

    ActionSpace(const CycAlgebra& algebra, Side side, std::vector<Mono> basis, std::vector<int> degrees,
                Action act);

    const CycAlgebra& algebra() const { return *algebra_; }
    Side side() const { return side_; }
    const std::vector<Mono>& basis() const { return basis_; }
    int degree(int p) const { return degrees_[p]; }
    int size() const { return static_cast<int>(basis_.size()); }
    int index(const Mono& m) const;
    // v * a (Right) or a * v (Left), reduced
    Elem act(const Mono& v, const Elem& a) const { return act_(v, a); }
    LaurentPoly graded_dim() const;

private:
    const CycAlgebra* algebra_;
    Side side_;
    std::vector<Mono> basis_;
    std::vector<int> degrees_;
    std::unordered_map<Mono, int, MonoHash> index_;
    Action act_;
};

// A acting on itself
ActionSpace regular_space(const CycAlgebra& A, ActionSpace::Side side);
// R^Lambda(beta) e(beta - alpha_i, i) with R^Lambda(beta - alpha_i) acting on the right through iota
ActionSpace column_space(const CycAlgebra& big, const CycAlgebra& small, int colour);
// e(beta - alpha_i, i) R^Lambda(beta) with R^Lambda(beta - alpha_i) acting on the left through iota
ActionSpace row_space(const CycAlgebra& big, const CycAlgebra& small, int colour);

// homogeneous algebra generators e(nu), x_k e(nu), tau_l e(nu)
std::vector<Elem> algebra_generators(const CycAlgebra& A);

struct TensorProduct {
    LaurentPoly graded_dim;
    // per degree, the pairs (m, n) of basis indices whose classes form a basis
    std::map<int, std::vector<std::pair<int, int>>> basis;
};

// (M (x) N) / span{ma (x) n - m (x) an}, degree by degree
TensorProduct tensor_over(const ActionSpace& M, const ActionSpace& N, const CycAlgebra& A);

// F_i E_i R^Lambda(beta) through the tensor product over R^Lambda(beta - alpha_i)
LaurentPoly fe_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i);
// F_j E_i R^Lambda(beta) = R^Lambda(beta - alpha_i + alpha_j) e(beta - alpha_i, j) (x) e(beta - alpha_i, i) R^Lambda(beta)
LaurentPoly fe_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int j);
// E_i F_j R^Lambda(beta) = e(beta + alpha_j - alpha_i, i) R^Lambda(beta + alpha_j) e(beta, j)
LaurentPoly ef_dim(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int i, int j);

}  // namespace klr
