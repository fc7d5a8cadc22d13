#pragma once

#include <memory>
#include <vector>

#include "klr/bimodule.hpp"

namespace klr {

// Polynomial in t_i with coefficients in R^Lambda(beta), stored as reduced
// normal forms indexed by the power of t_i. No trailing zero coefficients.
using TPoly = std::vector<Elem>;

void trim(TPoly& p);
TPoly tpoly_add(const TPoly& a, const TPoly& b);
TPoly tpoly_shift(const TPoly& a);  // a * t
TPoly tpoly_scale(const Scalar& c, const TPoly& a);

struct PhiStep {
    int k = 0;
    int degree = 0;
    // phi_k from the decomposition P(e(beta,i) tau_n ... tau_1 x_1^k e(i,beta)) = F(psi_k) + phi_k
    TPoly chase;
    // phi_k as the quotient of t^k (-1)^p a^Lambda(t) prod Q_{i,nu_a}(t, x_a) by S
    TPoly division;
    // F(psi_k) in K0 and E(psi_k) in R^Lambda(beta)
    Elem f_psi;
    Elem e_psi;
    // F(psi_k (x_n (x) 1)) in K0
    Elem f_psi_shifted;
    // F-span and t-span meet trivially in this degree
    bool direct = true;
    // E and F(- (x_n (x) 1)) are well defined on the image of F
    bool consistent = true;
};

class PhiComputation {
public:
    PhiComputation(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour, int kmax);

    int colour() const { return colour_; }
    // <h_i, Lambda - beta>
    int lambda_pairing() const { return a_; }
    int p() const { return p_; }
    const Scalar& gamma_inverse() const { return gamma_inv_; }
    const CycAlgebra& base() const { return *base_; }
    const GradedBimodule& K0() const { return *K0_; }
    const std::vector<PhiStep>& steps() const { return steps_; }
    int kmax() const { return kmax_; }

private:
    PhiStep compute(int k) const;
    TPoly divide(int k) const;

    int colour_;
    int n_;
    int a_;
    int p_;
    int kmax_;
    DominantWeight lam_;
    RootCombo beta_;
    Scalar gamma_inv_;
    std::shared_ptr<const KLRAlgebra> R_;
    std::shared_ptr<const CycAlgebra> base_;
    std::unique_ptr<GradedBimodule> K0_;
    std::vector<PhiStep> steps_;
};

}  // namespace klr
