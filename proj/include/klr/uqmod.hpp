#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/laurent.hpp"

namespace klr {

// f_{nu_1} ... f_{nu_n} v_Lambda
using FMonomial = std::vector<int>;

// [m]_{q^d}
LaurentPoly quantum_integer(int m, int d = 1);

// e_i f_nu v_Lambda as a combination of shorter f-monomials
std::map<FMonomial, LaurentPoly> e_action(const CartanDatum& D, const DominantWeight& lam, int i, const FMonomial& nu);

// all orderings of beta, lexicographic
std::vector<FMonomial> weight_sequences(const CartanDatum& D, const RootCombo& beta);

using GramMatrix = std::vector<std::vector<LaurentPoly>>;

// Shapovalov form on f-monomials of weight Lambda - beta, rows and columns
// in weight_sequences order.
class ShapovalovForm {
public:
    ShapovalovForm(CartanDatum D, DominantWeight lam);

    LaurentPoly pair(const FMonomial& mu, const FMonomial& nu);
    GramMatrix gram(const RootCombo& beta);
    int weight_dim(const RootCombo& beta);
    // q^c (f_mu v, f_nu v) with c = (Lambda|beta) - (beta|beta)/2
    LaurentPoly predicted_dim(const FMonomial& mu, const FMonomial& nu);

private:
    CartanDatum D_;
    DominantWeight lam_;
    std::map<std::pair<FMonomial, FMonomial>, LaurentPoly> memo_;
};

// rank over Q(q) by fraction-free elimination
int laurent_rank(GramMatrix m);

GramMatrix gram(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta);
int weight_dim(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta);
LaurentPoly predicted_dim(const CartanDatum& D, const DominantWeight& lam, const FMonomial& mu, const FMonomial& nu);

}  // namespace klr
