#pragma once

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "klr/context.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/klr.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"

namespace klr {

// Embeddings R(n) -> R(n+1). iota keeps strands 1..n and appends a strand of
// the given colour carrying x_{n+1}^power; xi shifts every strand up by one
// and prepends the new strand carrying x_1^power.
Mono embed_iota(const Mono& m, int n, int colour, int power = 0);
Mono embed_xi(const Mono& m, int n, int colour, int power = 0);
Elem embed_iota(const Elem& e, int colour, int power = 0);
Elem embed_xi(const Elem& e, int colour, int power = 0);

// The R(beta + alpha_i)-modules
//   K0 = R e(beta,i) / R x_1^Lambda R(beta) e(beta,i)
//   K1 = R e(i,beta) / R x_2^Lambda R^1(beta) e(i,beta)
//   F  = R^Lambda(beta + alpha_i) e(beta,i)
// realized through degree `window`. Elements are KLR elements of height
// |beta|+1 with normal forms in the quotient basis.
class GradedBimodule {
public:
    enum class Kind { K0, K1, F };

    GradedBimodule(const Context& ctx, Kind kind, const DominantWeight& lam, const RootCombo& beta, int colour,
                   int window);

    Kind kind() const { return kind_; }
    int colour() const { return colour_; }
    int height() const { return n_; }
    int window() const { return window_; }
    const DominantWeight& lambda() const { return lam_; }
    const RootCombo& beta() const { return beta_; }
    const KLRAlgebra& klr() const { return *R_; }
    const CycAlgebra& base() const { return *base_; }
    // strand carrying t_i
    int t_position() const { return kind_ == Kind::K1 ? 0 : n_; }
    Seq column(const Seq& nu) const;

    const std::vector<Mono>& basis() const { return basis_; }
    const std::vector<Mono>& basis_in_degree(int d) const;
    int dim(int d) const { return static_cast<int>(basis_in_degree(d).size()); }
    int min_degree() const { return min_degree_; }
    LaurentPoly graded_dim() const;

    Elem reduce(const Elem& e) const;
    bool is_zero(const Elem& e) const { return reduce(e).is_zero(); }
    // coordinates of a degree-d element in basis_in_degree(d)
    std::vector<Scalar> coords(const Elem& e, int d) const;
    Elem from_coords(const std::vector<Scalar>& v, int d) const;

    Elem embed(const Elem& b) const;
    Elem right_t(const Elem& e) const { return R_->right_x(e, t_position()); }
    Elem right_act(const Elem& e, const Elem& b) const { return R_->multiply(e, embed(b)); }

private:
    bool within_bounds(const Mono& m) const;

    Kind kind_;
    int colour_;
    int n_;
    int window_;
    DominantWeight lam_;
    RootCombo beta_;
    std::shared_ptr<const KLRAlgebra> R_;
    std::shared_ptr<const CycAlgebra> base_;
    std::shared_ptr<const CycAlgebra> top_;
    MonoQuotient quot_;
    std::vector<Mono> basis_;
    std::map<int, std::vector<Mono>> by_degree_;
    std::unordered_map<Mono, int, MonoHash> position_;
    int min_degree_ = 0;
};

// D_max(Lambda, beta + alpha_i) + 2 max_j (alpha_j|alpha_j)
int default_window(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour);

// A homogeneous linear map given on representatives.
struct GradedMap {
    const GradedBimodule* source = nullptr;
    const GradedBimodule* target = nullptr;
    int shift = 0;
    std::function<Elem(const Elem&)> apply;

    bool defined_at(int d) const;
    // rows indexed by source basis in degree d, columns by target basis in degree d + shift
    DenseMatrix matrix(int d) const;
    Elem operator()(const Elem& e) const { return target->reduce(apply(e)); }
};

// (alpha_i | 2 Lambda - beta)
int shift_P(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta, int colour);
// -(alpha_i|beta) + 2p (alpha_i|alpha_i), p the multiplicity of alpha_i in beta
int shift_Q(const CartanDatum& D, const RootCombo& beta, int colour);

// v x_1^level tau_1 ... tau_n in R(n+1)
Elem right_P(const KLRAlgebra& R, int level, const Elem& v);

// right multiplication by x_1^Lambda tau_1 ... tau_n
GradedMap map_P(const GradedBimodule& K1, const GradedBimodule& K0);
GradedMap map_pi(const GradedBimodule& K0, const GradedBimodule& F);
// right multiplication by g_n ... g_1
GradedMap map_Q(const GradedBimodule& K0, const GradedBimodule& K1);

// sum_nu a_i^Lambda(x_1) prod_{nu_a != i} Q_{i,nu_a}(x_1, x_{a+1}) e(i,nu)
Elem element_A(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int colour);
// sum_nu a_i^Lambda(x_{n+1}) prod_{nu_a != i} Q_{nu_a,i}(x_a, x_{n+1}) e(nu,i)
Elem element_B(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int colour);
// right multiplication by a homogeneous element of the ambient KLR algebra
GradedMap right_multiplication(const GradedBimodule& M, const Elem& z, int degree);

// x_1^Lambda tau_1 ... tau_n g_n ... g_1 e(i,nu) - A_nu e(i,nu)
Elem taug_difference(const KLRAlgebra& R, const DominantWeight& lam, const Seq& nu, int colour);

struct BimoduleTriple {
    std::unique_ptr<GradedBimodule> K0, K1, F;
    int window = 0;
};

// K0 and F through `window`, K1 through window - shift_P so that P lands inside K0's window.
BimoduleTriple build_bimodules(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour,
                               int window);

}  // namespace klr
