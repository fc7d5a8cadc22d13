#include "klr/cyclotomic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace klr {

NilpotencyBounds::NilpotencyBounds(const KLRAlgebra& R, const DominantWeight& lam, const std::vector<Seq>& seqs) {
    const CartanDatum& D = R.datum();
    D.check_weight(lam);
    for (int v : lam.levels)
        if (v < 0) throw std::invalid_argument("lambda: negative level");
    const int n = R.n();
    std::map<std::pair<int, Seq>, int> memo;
    std::function<int(int, const Seq&)> N = [&](int a, const Seq& nu) -> int {
        auto key = std::make_pair(a, nu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int r;
        if (a == 0) {
            r = lam.levels[nu[0]];
        } else if (nu[a - 1] == nu[a]) {
            r = N(a - 1, nu);
        } else {
            Seq s = nu;
            std::swap(s[a - 1], s[a]);
            r = N(a - 1, nu) * (N(a - 1, s) - D.a(nu[a], nu[a - 1]));
        }
        memo.emplace(key, r);
        return r;
    };
    for (const Seq& nu : seqs) {
        std::vector<int> row(n);
        for (int k = 0; k < n; ++k) row[k] = N(k, nu);
        table_.emplace(nu, std::move(row));
    }
}

NilpotencyBounds nilpotency_bounds(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta) {
    return NilpotencyBounds(R, lam, R.sequences(beta));
}

std::pair<int, int> degree_cap(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta) {
    auto seqs = R.sequences(beta);
    NilpotencyBounds b(R, lam, seqs);
    auto [lo, hi_cross] = R.crossing_degree_range(beta);
    (void)hi_cross;
    int hi = lo;
    for (const Seq& nu : seqs) {
        int extra = 0;
        for (int k = 0; k < R.n(); ++k) extra += std::max(b.at(nu, k) - 1, 0) * R.datum().sym(nu[k], nu[k]);
        for (int w = 0; w < R.perms().size(); ++w) hi = std::max(hi, R.crossing_degree(w, nu) + extra);
    }
    return {lo, hi};
}

int GradedPiece::column(const Mono& m) const {
    auto it = std::lower_bound(columns.begin(), columns.end(), m);
    if (it == columns.end() || !(*it == m)) return -1;
    return static_cast<int>(it - columns.begin());
}

SparseVec GradedPiece::coords(const Elem& e) const {
    SparseVec v;
    for (auto& [m, c] : e.terms()) {
        int col = column(m);
        if (col < 0) throw std::invalid_argument("element is not in the graded piece");
        v.emplace_back(col, c);
    }
    return v;
}

GradedPiece ideal_piece(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int d) {
    GradedPiece piece;
    piece.degree = d;
    piece.columns = R.basis_monomials(beta, d);
    if (R.n() == 0) return piece;
    auto seqs = R.sequences(beta);
    const int dmin = R.crossing_degree_range(beta).first;
    std::map<int, std::vector<Mono>> by_degree;
    for (const Seq& nu : seqs) {
        const int c = lam.levels[nu[0]];
        for (int w = 0; w < R.perms().size(); ++w) {
            Mono left{static_cast<std::uint16_t>(w), nu, unit_exps(0, c)};
            const int d2 = d - R.degree(left);
            if (d2 < dmin) continue;
            auto found = by_degree.find(d2);
            if (found == by_degree.end()) found = by_degree.emplace(d2, R.basis_monomials(beta, d2)).first;
            for (const Mono& right : found->second) {
                if (R.left_idem(right) != nu) continue;
                piece.span.insert(piece.coords(R.multiply(left, right)));
            }
        }
    }
    return piece;
}

MonoQuotient::MonoQuotient(int n, std::vector<Mono> small) : n_(n), small_(std::move(small)) {
    index_.reserve(small_.size());
    for (std::size_t p = 0; p < small_.size(); ++p) index_.emplace(small_[p], static_cast<int>(p));
}

int MonoQuotient::column(const Mono& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return -1;
    return static_cast<int>(small_.size()) - 1 - it->second;
}

Elem MonoQuotient::project(const Elem& e) const {
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms())
        if (is_small(m)) acc.add(m, c);
    return acc.finish();
}

SparseVec MonoQuotient::to_vec(const Elem& e) const {
    SparseVec v;
    v.reserve(e.size());
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        int col = column(it->first);
        if (col < 0) throw std::logic_error("monomial outside the small set");
        v.emplace_back(col, it->second);
    }
    return v;
}

Elem MonoQuotient::to_elem(const SparseVec& v) const {
    Accumulator acc(n_);
    const int last = static_cast<int>(small_.size()) - 1;
    for (auto& [col, c] : v) acc.add(small_[last - col], c);
    return acc.finish();
}

Elem MonoQuotient::insert(const Elem& v) { return to_elem(span_.insert(to_vec(v))); }

Elem MonoQuotient::reduce(const Elem& e) const { return to_elem(span_.reduce(to_vec(project(e)))); }

std::vector<Elem> MonoQuotient::relations() const {
    std::vector<Elem> out;
    for (auto& [col, row] : span_.rows()) out.push_back(to_elem(row));
    return out;
}

std::vector<Mono> MonoQuotient::basis() const {
    std::vector<Mono> out;
    for (const Mono& m : small_)
        if (!span_.is_pivot(column(m))) out.push_back(m);
    return out;
}

void CycAlgebra::init_small() {
    const KLRAlgebra& A = *R_;
    const int n = A.n();
    seqs_ = A.sequences(beta_);
    bounds_ = NilpotencyBounds(A, lam_, seqs_);
    cap_ = klr::degree_cap(A, lam_, beta_);

    std::vector<Mono> small;
    for (const Seq& nu : seqs_) {
        const auto& b = bounds_.of(nu);
        if (std::any_of(b.begin(), b.end(), [](int v) { return v == 0; })) continue;
        for (int w = 0; w < A.perms().size(); ++w) {
            Mono m{static_cast<std::uint16_t>(w), nu, {}};
            auto rec = [&](auto& self, int k) -> void {
                if (k == n) {
                    small.push_back(m);
                    return;
                }
                for (int e = 0; e < b[k]; ++e) {
                    m.a[k] = static_cast<std::uint16_t>(e);
                    self(self, k + 1);
                }
                m.a[k] = 0;
            };
            rec(rec, 0);
        }
    }
    quot_ = MonoQuotient(n, std::move(small));
}

void CycAlgebra::init_basis() {
    const KLRAlgebra& A = *R_;
    basis_ = quot_.basis();
    for (std::size_t p = 0; p < basis_.size(); ++p) basis_index_.emplace(basis_[p], static_cast<int>(p));
    for (const Mono& m : basis_) {
        int d = A.degree(m);
        if (d < cap_.first || d > cap_.second) throw std::logic_error("quotient basis outside the degree cap");
    }
}

CycAlgebra::CycAlgebra(std::shared_ptr<const KLRAlgebra> R, DominantWeight lam, RootCombo beta,
                       const std::vector<Elem>& relations)
    : R_(std::move(R)), lam_(std::move(lam)), beta_(std::move(beta)) {
    init_small();
    for (const Elem& r : relations) {
        if (r.is_zero() || !(quot_.project(r) == r)) throw std::invalid_argument("stored relation outside the small span");
        quot_.adopt(r);
    }
    init_basis();
}

CycAlgebra::CycAlgebra(std::shared_ptr<const KLRAlgebra> R, DominantWeight lam, RootCombo beta)
    : R_(std::move(R)), lam_(std::move(lam)), beta_(std::move(beta)) {
    init_small();
    const KLRAlgebra& A = *R_;
    const int n = A.n();

    std::deque<Elem> queue;
    auto push = [&](const Elem& e) {
        Elem p = quot_.project(e);
        if (p.is_zero()) return;
        Elem r = quot_.insert(p);
        if (!r.is_zero()) queue.push_back(std::move(r));
    };

    for (const Seq& rho : seqs_) {
        const auto& b = bounds_.of(rho);
        for (int l = 0; l + 1 < n; ++l) {
            Seq s = rho;
            std::swap(s[l], s[l + 1]);
            const auto& bs = bounds_.of(s);
            std::vector<int> top(n);
            const int M = std::max({bs[l + 1], bs[l], b[l] + b[l + 1]});
            for (int k = 0; k < n; ++k) top[k] = (k == l || k == l + 1) ? M + 1 : std::max(b[k], bs[k]);
            Mono m{0, rho, {}};
            auto rec = [&](auto& self, int k, bool big) -> void {
                if (k == n) {
                    if (big) push(A.right_tau(m, l));
                    return;
                }
                for (int e = 0; e < top[k]; ++e) {
                    m.a[k] = static_cast<std::uint16_t>(e);
                    self(self, k + 1, big || e >= b[k]);
                }
                m.a[k] = 0;
            };
            rec(rec, 0, false);
        }
    }

    while (!queue.empty()) {
        Elem r = std::move(queue.front());
        queue.pop_front();
        for (int k = 0; k < n; ++k) {
            push(A.left_x(k, r));
            push(A.right_x(r, k));
        }
        for (int l = 0; l + 1 < n; ++l) {
            push(A.left_tau(l, r));
            push(A.right_tau(r, l));
        }
    }

    init_basis();
}

void CycAlgebra::check_seq(const Seq& nu) const {
    if (!std::binary_search(seqs_.begin(), seqs_.end(), nu))
        throw std::invalid_argument("sequence does not have weight beta");
}

std::vector<Mono> CycAlgebra::basis_in_degree(int d) const {
    std::vector<Mono> out;
    for (const Mono& m : basis_)
        if (R_->degree(m) == d) out.push_back(m);
    return out;
}

std::vector<Mono> CycAlgebra::truncation_basis(const Seq& mu, const Seq& nu) const {
    check_seq(mu);
    check_seq(nu);
    std::vector<Mono> out;
    for (const Mono& m : basis_)
        if (m.nu == nu && R_->left_idem(m) == mu) out.push_back(m);
    return out;
}

int CycAlgebra::basis_index(const Mono& m) const {
    auto it = basis_index_.find(m);
    return it == basis_index_.end() ? -1 : it->second;
}

LaurentPoly CycAlgebra::graded_dim() const {
    LaurentPoly p;
    for (const Mono& m : basis_) p.add_term(R_->degree(m), 1);
    return p;
}

LaurentPoly CycAlgebra::truncation_dim(const Seq& mu, const Seq& nu) const {
    LaurentPoly p;
    for (const Mono& m : truncation_basis(mu, nu)) p.add_term(R_->degree(m), 1);
    return p;
}

Elem CycAlgebra::multiply(const Elem& a, const Elem& b) const { return reduce(R_->multiply(a, b)); }

Elem CycAlgebra::unit() const { return reduce(R_->unit(seqs_)); }

}  // namespace klr
