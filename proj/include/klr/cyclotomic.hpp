#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klr/klr.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"

namespace klr {

// x_k^{N_k(nu)} e(nu) lies in the cyclotomic ideal of R(beta).
class NilpotencyBounds {
public:
    NilpotencyBounds() = default;
    NilpotencyBounds(const KLRAlgebra& R, const DominantWeight& lam, const std::vector<Seq>& seqs);
    int at(const Seq& nu, int k) const { return table_.at(nu)[k]; }
    const std::vector<int>& of(const Seq& nu) const { return table_.at(nu); }
    const std::map<Seq, std::vector<int>>& table() const { return table_; }

private:
    std::map<Seq, std::vector<int>> table_;
};

NilpotencyBounds nilpotency_bounds(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta);
std::pair<int, int> degree_cap(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta);

// A homogeneous subspace of R(beta)_d given by an echelon basis over the
// degree-d basis monomials.
struct GradedPiece {
    int degree = 0;
    std::vector<Mono> columns;
    Echelon span;

    int column(const Mono& m) const;
    SparseVec coords(const Elem& e) const;
    bool contains(const Elem& e) const { return span.contains(coords(e)); }
    int dim() const { return span.rank(); }
};

// I_d spanned by products b1 x_1^Lambda b2 of basis monomials.
GradedPiece ideal_piece(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int d);

// span(Small) / W for a finite sorted list of monomials Small and a subspace W
// of span(Small). Pivots are taken at the largest monomial of each relation,
// so the quotient basis prefers small monomials.
class MonoQuotient {
public:
    MonoQuotient() = default;
    MonoQuotient(int n, std::vector<Mono> small);

    int n() const { return n_; }
    int column(const Mono& m) const;
    bool is_small(const Mono& m) const { return column(m) >= 0; }
    const std::vector<Mono>& small() const { return small_; }
    Elem project(const Elem& e) const;
    // Adds a small-supported element to W; returns its nonzero reduction if new.
    Elem insert(const Elem& v);
    // Stores a relation row verbatim, as returned by relations().
    void adopt(const Elem& row) { span_.adopt(to_vec(row)); }
    // Projects to span(Small), then eliminates the pivots of W.
    Elem reduce(const Elem& e) const;
    int relation_rank() const { return span_.rank(); }
    std::vector<Elem> relations() const;
    // non-pivot small monomials in canonical order
    std::vector<Mono> basis() const;

    SparseVec to_vec(const Elem& e) const;
    Elem to_elem(const SparseVec& v) const;

private:
    int n_ = 0;
    std::vector<Mono> small_;
    std::unordered_map<Mono, int, MonoHash> index_;
    Echelon span_;
};

// R^Lambda(beta) realized as span(Small)/pi_S(I).
class CycAlgebra {
public:
    CycAlgebra(std::shared_ptr<const KLRAlgebra> R, DominantWeight lam, RootCombo beta);
    // Restores a quotient from its stored relations, skipping the closure.
    CycAlgebra(std::shared_ptr<const KLRAlgebra> R, DominantWeight lam, RootCombo beta,
               const std::vector<Elem>& relations);

    const KLRAlgebra& klr() const { return *R_; }
    std::shared_ptr<const KLRAlgebra> klr_ptr() const { return R_; }
    const DominantWeight& lambda() const { return lam_; }
    const RootCombo& beta() const { return beta_; }
    const std::vector<Seq>& seqs() const { return seqs_; }
    const NilpotencyBounds& bounds() const { return bounds_; }
    std::pair<int, int> degree_cap() const { return cap_; }

    bool is_small(const Mono& m) const { return quot_.is_small(m); }
    const std::vector<Mono>& basis() const { return basis_; }
    std::vector<Mono> basis_in_degree(int d) const;
    std::vector<Mono> truncation_basis(const Seq& mu, const Seq& nu) const;
    int basis_index(const Mono& m) const;
    int dim() const { return static_cast<int>(basis_.size()); }
    LaurentPoly graded_dim() const;
    LaurentPoly truncation_dim(const Seq& mu, const Seq& nu) const;

    Elem reduce(const Elem& e) const { return quot_.reduce(e); }
    bool in_ideal(const Elem& e) const { return reduce(e).is_zero(); }
    Elem multiply(const Elem& a, const Elem& b) const;
    Elem unit() const;
    // echelon spanning set of pi_S(I)
    std::vector<Elem> ideal_relations() const { return quot_.relations(); }
    const MonoQuotient& quotient() const { return quot_; }

private:
    void init_small();
    void init_basis();
    void check_seq(const Seq& nu) const;

    std::shared_ptr<const KLRAlgebra> R_;
    DominantWeight lam_;
    RootCombo beta_;
    std::vector<Seq> seqs_;
    NilpotencyBounds bounds_;
    std::pair<int, int> cap_;
    MonoQuotient quot_;
    std::vector<Mono> basis_;
    std::unordered_map<Mono, int, MonoHash> basis_index_;
};

}  // namespace klr
