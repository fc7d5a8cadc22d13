#include "klr/bimodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace klr {

namespace {

int lift_perm(int w, int n, bool shift) {
    Word word = PermTable::get(n).word(w);
    if (shift)
        for (auto& l : word) ++l;
    return PermTable::get(n + 1).from_word(word);
}

Elem embed_elem(const Elem& e, int colour, int power, bool shift) {
    const int n = e.n();
    Accumulator acc(n + 1);
    for (auto& [m, c] : e.terms()) acc.add(shift ? embed_xi(m, n, colour, power) : embed_iota(m, n, colour, power), c);
    return acc.finish();
}

// minimal length coset representatives for the position of the new strand
std::vector<Word> coset_words(int n, bool shift) {
    std::vector<Word> out;
    for (int j = 0; j <= n; ++j) {
        Word w;
        if (shift)
            for (int l = j - 1; l >= 0; --l) w.push_back(static_cast<std::uint8_t>(l));
        else
            for (int l = j; l < n; ++l) w.push_back(static_cast<std::uint8_t>(l));
        out.push_back(w);
    }
    return out;
}

}  // namespace

Mono embed_iota(const Mono& m, int n, int colour, int power) {
    Mono out{static_cast<std::uint16_t>(lift_perm(m.w, n, false)), m.nu, m.a};
    out.nu[n] = static_cast<std::uint8_t>(colour);
    out.a[n] = static_cast<std::uint16_t>(power);
    return out;
}

Mono embed_xi(const Mono& m, int n, int colour, int power) {
    Mono out{static_cast<std::uint16_t>(lift_perm(m.w, n, true)), {}, {}};
    out.nu[0] = static_cast<std::uint8_t>(colour);
    out.a[0] = static_cast<std::uint16_t>(power);
    for (int k = 0; k < n; ++k) {
        out.nu[k + 1] = m.nu[k];
        out.a[k + 1] = m.a[k];
    }
    return out;
}

Elem embed_iota(const Elem& e, int colour, int power) { return embed_elem(e, colour, power, false); }
Elem embed_xi(const Elem& e, int colour, int power) { return embed_elem(e, colour, power, true); }

GradedBimodule::GradedBimodule(const Context& ctx, Kind kind, const DominantWeight& lam, const RootCombo& beta,
                               int colour, int window)
    : kind_(kind), colour_(colour), n_(beta.height()), window_(window), lam_(lam), beta_(beta) {
    const CartanDatum& D = ctx.datum();
    if (colour < 0 || colour >= D.rank()) throw std::out_of_range("colour out of range");
    if (n_ + 1 > kMaxStrands) throw std::out_of_range("too many strands");
    R_ = ctx.klr(n_ + 1);
    base_ = ctx.cyc(lam, beta);
    const KLRAlgebra& R = *R_;

    if (kind_ == Kind::F) {
        top_ = ctx.cyc(lam, beta.plus(colour));
        for (const Mono& m : top_->basis()) {
            if (m.nu[n_] != colour) continue;
            if (R.degree(m) > window_) throw std::invalid_argument("degree window smaller than the support of F");
            basis_.push_back(m);
        }
    } else {
        const bool shift = kind_ == Kind::K1;
        const int free = t_position();
        const int tdeg = D.sym(colour, colour);
        std::vector<Mono> small;
        for (const Seq& nu : base_->seqs()) {
            const auto& b = base_->bounds().of(nu);
            if (std::any_of(b.begin(), b.end(), [](int v) { return v == 0; })) continue;
            const Seq col = column(nu);
            for (int w = 0; w < R.perms().size(); ++w) {
                Mono m{static_cast<std::uint16_t>(w), col, {}};
                auto rec = [&](auto& self, int k, int deg) -> void {
                    if (k == n_) {
                        for (int e = 0; deg + e * tdeg <= window_; ++e) {
                            m.a[free] = static_cast<std::uint16_t>(e);
                            small.push_back(m);
                        }
                        m.a[free] = 0;
                        return;
                    }
                    const int pos = shift ? k + 1 : k;
                    for (int e = 0; e < b[k]; ++e) {
                        m.a[pos] = static_cast<std::uint16_t>(e);
                        self(self, k + 1, deg + e * D.sym(col[pos], col[pos]));
                    }
                    m.a[pos] = 0;
                };
                rec(rec, 0, R.crossing_degree(w, col));
            }
        }
        std::sort(small.begin(), small.end());
        quot_ = MonoQuotient(n_ + 1, std::move(small));

        const KLRAlgebra& S = base_->klr();
        const auto words = coset_words(n_, shift);
        for (const Elem& g : base_->ideal_relations()) {
            std::map<Seq, Accumulator> pieces;
            for (auto& [m, c] : g.terms()) pieces.try_emplace(S.left_idem(m), n_).first->second.add(m, c);
            for (auto& [mu, acc] : pieces) {
                Elem h = acc.finish();
                const int dh = *S.degree(h);
                const Seq top_mu = column(mu);
                for (const Word& word : words) {
                    const int cu = R.crossing_degree(R.perms().from_word(word), top_mu);
                    for (int k = 0; dh + cu + k * tdeg <= window_; ++k) {
                        Elem x = R.left_word(word, embed_elem(h, colour, k, shift));
                        Elem p = quot_.project(x);
                        if (!p.is_zero()) quot_.insert(p);
                    }
                }
            }
        }
        basis_ = quot_.basis();
    }

    for (const Mono& m : basis_) by_degree_[R.degree(m)].push_back(m);
    for (auto& [d, ms] : by_degree_)
        for (std::size_t p = 0; p < ms.size(); ++p) position_.emplace(ms[p], static_cast<int>(p));
    min_degree_ = by_degree_.empty() ? 0 : by_degree_.begin()->first;
}

Seq GradedBimodule::column(const Seq& nu) const {
    Seq out{};
    if (kind_ == Kind::K1) {
        out[0] = static_cast<std::uint8_t>(colour_);
        for (int k = 0; k < n_; ++k) out[k + 1] = nu[k];
    } else {
        out = nu;
        out[n_] = static_cast<std::uint8_t>(colour_);
    }
    return out;
}

bool GradedBimodule::within_bounds(const Mono& m) const {
    Seq nu{};
    const int off = kind_ == Kind::K1 ? 1 : 0;
    if (m.nu[kind_ == Kind::K1 ? 0 : n_] != colour_) return false;
    for (int k = 0; k < n_; ++k) nu[k] = m.nu[k + off];
    const auto& table = base_->bounds().table();
    auto it = table.find(nu);
    if (it == table.end()) return false;
    for (int k = 0; k < n_; ++k)
        if (m.a[k + off] >= it->second[k]) return false;
    return true;
}

const std::vector<Mono>& GradedBimodule::basis_in_degree(int d) const {
    static const std::vector<Mono> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

LaurentPoly GradedBimodule::graded_dim() const {
    LaurentPoly p;
    for (auto& [d, ms] : by_degree_) p.add_term(d, static_cast<std::int64_t>(ms.size()));
    return p;
}

Elem GradedBimodule::reduce(const Elem& e) const {
    if (e.n() != n_ + 1) throw std::invalid_argument("ambient strand count mismatch");
    const int pos = kind_ == Kind::K1 ? 0 : n_;
    for (auto& [m, c] : e.terms()) {
        if (m.nu[pos] != colour_) throw std::invalid_argument("idempotent does not belong to the module");
        if (kind_ != Kind::F && within_bounds(m) && R_->degree(m) > window_)
            throw std::out_of_range("element beyond the degree window");
    }
    if (kind_ == Kind::F) return top_->reduce(e);
    return quot_.reduce(e);
}

std::vector<Scalar> GradedBimodule::coords(const Elem& e, int d) const {
    std::vector<Scalar> v(basis_in_degree(d).size());
    const Elem r = reduce(e);
    for (auto& [m, c] : r.terms()) {
        auto it = position_.find(m);
        if (it == position_.end() || R_->degree(m) != d) throw std::invalid_argument("element is not of the given degree");
        v[it->second] = c;
    }
    return v;
}

Elem GradedBimodule::from_coords(const std::vector<Scalar>& v, int d) const {
    const auto& ms = basis_in_degree(d);
    Accumulator acc(n_ + 1);
    for (std::size_t p = 0; p < v.size(); ++p)
        if (v[p] != 0) acc.add(ms.at(p), v[p]);
    return acc.finish();
}

Elem GradedBimodule::embed(const Elem& b) const { return embed_elem(b, colour_, 0, kind_ == Kind::K1); }

int default_window(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour) {
    const CartanDatum& D = ctx.datum();
    RootCombo up = beta.plus(colour);
    int top = degree_cap(*ctx.klr(up.height()), lam, up).second;
    int m = 0;
    for (int j = 0; j < D.rank(); ++j) m = std::max(m, D.sym(j, j));
    return top + 2 * m;
}

bool GradedMap::defined_at(int d) const { return d <= source->window() && d + shift <= target->window(); }

DenseMatrix GradedMap::matrix(int d) const {
    if (!defined_at(d)) throw std::out_of_range("degree outside the window of the map");
    DenseMatrix m;
    for (const Mono& b : source->basis_in_degree(d))
        m.push_back(target->coords(apply(source->klr().elem(b)), d + shift));
    return m;
}

int shift_P(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta, int colour) {
    return D.sym(colour, colour) * lam.levels.at(colour) - D.sym_form(D.simple_root(colour), beta);
}

int shift_Q(const CartanDatum& D, const RootCombo& beta, int colour) {
    return -D.sym_form(D.simple_root(colour), beta) + 2 * beta.coeffs.at(colour) * D.sym(colour, colour);
}

Elem right_P(const KLRAlgebra& R, int level, const Elem& v) {
    Elem r = v;
    for (int k = 0; k < level; ++k) r = R.right_x(r, 0);
    for (int l = 0; l + 1 < R.n(); ++l) r = R.right_tau(r, l);
    return r;
}

GradedMap map_P(const GradedBimodule& K1, const GradedBimodule& K0) {
    if (K1.kind() != GradedBimodule::Kind::K1 || K0.kind() != GradedBimodule::Kind::K0)
        throw std::invalid_argument("P maps K1 to K0");
    const KLRAlgebra& R = K0.klr();
    const int level = K0.lambda().levels.at(K0.colour());
    GradedMap f;
    f.source = &K1;
    f.target = &K0;
    f.shift = shift_P(R.datum(), K0.lambda(), K0.beta(), K0.colour());
    f.apply = [&R, level](const Elem& v) { return right_P(R, level, v); };
    return f;
}

GradedMap map_pi(const GradedBimodule& K0, const GradedBimodule& F) {
    if (K0.kind() != GradedBimodule::Kind::K0 || F.kind() != GradedBimodule::Kind::F)
        throw std::invalid_argument("pi maps K0 to F");
    GradedMap f;
    f.source = &K0;
    f.target = &F;
    f.shift = 0;
    f.apply = [](const Elem& v) { return v; };
    return f;
}

GradedMap map_Q(const GradedBimodule& K0, const GradedBimodule& K1) {
    if (K1.kind() != GradedBimodule::Kind::K1 || K0.kind() != GradedBimodule::Kind::K0)
        throw std::invalid_argument("Q maps K0 to K1");
    const KLRAlgebra& R = K0.klr();
    const int n = K0.height();
    auto seqs = R.sequences(K0.beta().plus(K0.colour()));
    std::vector<Elem> gs;
    for (int a = n - 1; a >= 0; --a) gs.push_back(R.intertwiner(a, seqs));
    GradedMap f;
    f.source = &K0;
    f.target = &K1;
    f.shift = shift_Q(R.datum(), K0.beta(), K0.colour());
    f.apply = [&R, gs](const Elem& v) {
        Elem r = v;
        for (const Elem& g : gs) r = R.multiply(r, g);
        return r;
    };
    return f;
}

Elem element_A(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int colour) {
    const int n = R.n() - 1;
    Accumulator acc(R.n());
    for (const Seq& col : R.sequences(beta.plus(colour))) {
        if (col[0] != colour) continue;
        Poly p;
        poly_add(p, unit_exps(0, lam.levels.at(colour)), 1);
        for (int a = 1; a <= n; ++a)
            if (col[a] != colour) p = poly_mul(p, R.q_poly(colour, col[a], 0, a));
        acc.add(R.from_poly(p, col));
    }
    return acc.finish();
}

Elem element_B(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta, int colour) {
    const int n = R.n() - 1;
    Accumulator acc(R.n());
    for (const Seq& col : R.sequences(beta.plus(colour))) {
        if (col[n] != colour) continue;
        Poly p;
        poly_add(p, unit_exps(n, lam.levels.at(colour)), 1);
        for (int a = 0; a < n; ++a)
            if (col[a] != colour) p = poly_mul(p, R.q_poly(col[a], colour, a, n));
        acc.add(R.from_poly(p, col));
    }
    return acc.finish();
}

GradedMap right_multiplication(const GradedBimodule& M, const Elem& z, int degree) {
    const KLRAlgebra& R = M.klr();
    GradedMap f;
    f.source = &M;
    f.target = &M;
    f.shift = degree;
    f.apply = [&R, z](const Elem& v) { return R.multiply(v, z); };
    return f;
}

Elem taug_difference(const KLRAlgebra& R, const DominantWeight& lam, const Seq& nu, int colour) {
    const int n = R.n() - 1;
    Seq col{};
    col[0] = static_cast<std::uint8_t>(colour);
    for (int k = 0; k < n; ++k) col[k + 1] = nu[k];
    RootCombo w = R.weight(col);
    auto seqs = R.sequences(w);
    Elem r = right_P(R, lam.levels.at(colour), R.idem(col));
    for (int a = n - 1; a >= 0; --a) r = R.multiply(r, R.intertwiner(a, seqs));
    RootCombo beta = w;
    beta.coeffs[colour] -= 1;
    Elem A = R.multiply(R.idem(col), element_A(R, lam, beta, colour));
    return r - A;
}

BimoduleTriple build_bimodules(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour,
                               int window) {
    BimoduleTriple t;
    t.window = window;
    const int s = shift_P(ctx.datum(), lam, beta, colour);
    t.K0 = std::make_unique<GradedBimodule>(ctx, GradedBimodule::Kind::K0, lam, beta, colour, window);
    t.K1 = std::make_unique<GradedBimodule>(ctx, GradedBimodule::Kind::K1, lam, beta, colour, window - s);
    t.F = std::make_unique<GradedBimodule>(ctx, GradedBimodule::Kind::F, lam, beta, colour, window);
    return t;
}

}  // namespace klr
