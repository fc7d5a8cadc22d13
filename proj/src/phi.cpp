#include "klr/phi.hpp"

#include <stdexcept>

namespace klr {

void trim(TPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly tpoly_add(const TPoly& a, const TPoly& b) {
    TPoly out(std::max(a.size(), b.size()));
    for (std::size_t m = 0; m < out.size(); ++m) {
        if (m < a.size() && m < b.size())
            out[m] = a[m] + b[m];
        else
            out[m] = m < a.size() ? a[m] : b[m];
    }
    trim(out);
    return out;
}

TPoly tpoly_shift(const TPoly& a) {
    if (a.empty()) return a;
    TPoly out;
    out.push_back(Elem(a.front().n()));
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

TPoly tpoly_scale(const Scalar& c, const TPoly& a) {
    TPoly out;
    for (const Elem& e : a) out.push_back(c * e);
    trim(out);
    return out;
}

namespace {

using TSplit = std::map<int, Poly>;

TSplit split_t(const Poly& p, int t) {
    TSplit out;
    for (auto& [e, c] : p) {
        Exps x = e;
        int m = x[t];
        x[t] = 0;
        poly_add(out[m], x, c);
    }
    return out;
}

void drop_zeros(TSplit& p) {
    for (auto it = p.begin(); it != p.end();) it = it->second.empty() ? p.erase(it) : std::next(it);
}

}  // namespace

PhiComputation::PhiComputation(const Context& ctx, const DominantWeight& lam, const RootCombo& beta, int colour,
                               int kmax)
    : colour_(colour), n_(beta.height()), kmax_(kmax), lam_(lam), beta_(beta) {
    const CartanDatum& D = ctx.datum();
    if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
    a_ = D.coroot_pair(colour, lam, beta);
    p_ = beta.coeffs.at(colour);
    gamma_inv_ = (p_ % 2 == 0) ? 1 : -1;
    for (int j = 0; j < D.rank(); ++j) {
        if (j == colour) continue;
        const auto& q = ctx.qspec().poly(colour, j);
        auto it = q.find({-D.a(colour, j), 0});
        if (it == q.end()) throw std::logic_error("Q-polynomial without leading term");
        for (int r = 0; r < beta.coeffs.at(j); ++r) gamma_inv_ *= it->second;
    }
    R_ = ctx.klr(n_ + 1);
    base_ = ctx.cyc(lam, beta);
    const int sym = D.sym(colour, colour);
    K0_ = std::make_unique<GradedBimodule>(ctx, GradedBimodule::Kind::K0, lam, beta, colour, sym * (a_ + kmax + 1));
    for (int k = 0; k <= kmax; ++k) steps_.push_back(compute(k));
}

PhiStep PhiComputation::compute(int k) const {
    const KLRAlgebra& R = *R_;
    const KLRAlgebra& S = base_->klr();
    const CartanDatum& D = R.datum();
    const int sym = D.sym(colour_, colour_);
    const GradedBimodule& K0 = *K0_;
    PhiStep step;
    step.k = k;
    step.degree = sym * (a_ + k);
    const int d = step.degree;
    step.division = divide(k);

    Word down;
    for (int l = n_ - 1; l >= 0; --l) down.push_back(static_cast<std::uint8_t>(l));
    Accumulator lift(n_ + 1);
    for (const Seq& nu : base_->seqs()) {
        Seq col{};
        col[0] = static_cast<std::uint8_t>(colour_);
        for (int j = 0; j < n_; ++j) col[j + 1] = nu[j];
        lift.add(R.left_word(down, R.elem(Mono{0, col, unit_exps(0, k)})));
    }
    Elem z = K0.reduce(right_P(R, lam_.levels.at(colour_), lift.finish()));

    // generators of F(K0'): tau_u x_n^c e(nu') (x) y
    struct Gen {
        Elem x;
        Elem xs;
        const Mono* y;
    };
    std::vector<Gen> gens;
    if (n_ > 0) {
        std::vector<Word> words;
        for (int j = 0; j < n_; ++j) {
            Word w;
            for (int l = j; l < n_ - 1; ++l) w.push_back(static_cast<std::uint8_t>(l));
            words.push_back(w);
        }
        for (const Mono& y : base_->basis()) {
            const Seq mu = S.left_idem(y);
            if (mu[n_ - 1] != colour_) continue;
            const int dy = S.degree(y);
            for (const Word& w : words) {
                const int cu = S.crossing_degree(S.perms().from_word(w), mu);
                const int rest = d + sym - dy - cu;
                if (rest < 0 || rest % sym != 0) continue;
                const int c = rest / sym;
                Elem x = S.left_word(w, S.elem(Mono{0, mu, unit_exps(n_ - 1, c)}));
                Elem xs = S.left_word(w, S.elem(Mono{0, mu, unit_exps(n_ - 1, c + 1)}));
                gens.push_back({x, xs, &y});
            }
        }
    }
    auto F = [&](const Elem& x, const Mono& y) {
        Elem left = R.right_tau(embed_iota(x, colour_, 0), n_ - 1);
        return R.multiply(left, embed_iota(S.elem(y), colour_, 0));
    };

    struct TGen {
        const Mono* b;
        int m;
    };
    std::vector<TGen> tgens;
    for (const Mono& b : base_->basis()) {
        const int rest = d - S.degree(b);
        if (rest < 0 || rest % sym != 0) continue;
        tgens.push_back({&b, rest / sym});
    }

    const int rows = K0.dim(d);
    const int J = static_cast<int>(gens.size());
    const int L = static_cast<int>(tgens.size());
    DenseMatrix M(rows, std::vector<Scalar>(J + L + 1));
    std::vector<Elem> fimg, fshift, eimg;
    for (int j = 0; j < J; ++j) {
        auto v = K0.coords(F(gens[j].x, *gens[j].y), d);
        for (int r = 0; r < rows; ++r) M[r][j] = v[r];
        fimg.push_back(K0.from_coords(v, d));
        fshift.push_back(K0.reduce(F(gens[j].xs, *gens[j].y)));
        eimg.push_back(base_->reduce(S.multiply(gens[j].x, S.elem(*gens[j].y))));
    }
    for (int l = 0; l < L; ++l) {
        auto v = K0.coords(embed_iota(S.elem(*tgens[l].b), colour_, tgens[l].m), d);
        for (int r = 0; r < rows; ++r) M[r][J + l] = v[r];
    }
    auto zv = K0.coords(z, d);
    for (int r = 0; r < rows; ++r) M[r][J + L] = zv[r];

    auto pivots = rref(M);
    std::vector<int> pivot_row(J + L + 1, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
    if (pivot_row[J + L] >= 0) throw std::logic_error("lift image outside the F-span plus the t-span");
    for (int l = 0; l < L; ++l)
        if (pivot_row[J + l] < 0) step.direct = false;

    auto coeff = [&](int col) -> Scalar { return pivot_row[col] < 0 ? Scalar(0) : M[pivot_row[col]][J + L]; };
    for (int l = 0; l < L; ++l) {
        Scalar c = coeff(J + l);
        if (c == 0) continue;
        const int m = tgens[l].m;
        if (static_cast<int>(step.chase.size()) <= m) step.chase.resize(m + 1, Elem(n_));
        step.chase[m] = step.chase[m] + c * S.elem(*tgens[l].b);
    }
    trim(step.chase);

    Accumulator fp(n_ + 1), fs(n_ + 1), ep(n_);
    for (int j = 0; j < J; ++j) {
        Scalar c = coeff(j);
        if (c == 0) continue;
        fp.add(fimg[j], c);
        fs.add(fshift[j], c);
        ep.add(eimg[j], c);
    }
    step.f_psi = fp.finish();
    step.f_psi_shifted = K0.reduce(fs.finish());
    step.e_psi = base_->reduce(ep.finish());

    // E and the x_n shift must vanish on relations among the F-images.
    if (J > 0) {
        const auto& bb = base_->basis();
        const int dshift = d + sym;
        DenseMatrix fonly, full;
        for (int j = 0; j < J; ++j) {
            auto fv = K0.coords(fimg[j], d);
            auto sv = K0.coords(fshift[j], dshift);
            std::vector<Scalar> ev(bb.size());
            for (auto& [m, c] : eimg[j].terms()) ev[base_->basis_index(m)] = c;
            std::vector<Scalar> row = fv;
            row.insert(row.end(), ev.begin(), ev.end());
            row.insert(row.end(), sv.begin(), sv.end());
            fv.push_back(0);
            row.push_back(0);
            fonly.push_back(fv);
            full.push_back(row);
        }
        step.consistent = dense_rank(fonly) == dense_rank(full);
    }
    return step;
}

TPoly PhiComputation::divide(int k) const {
    const KLRAlgebra& R = *R_;
    const KLRAlgebra& S = base_->klr();
    const int t = n_;
    std::map<int, Accumulator> coeffs;
    for (const Seq& nu : base_->seqs()) {
        Seq col = nu;
        col[n_] = static_cast<std::uint8_t>(colour_);
        Poly num;
        poly_add(num, unit_exps(t, k + lam_.levels.at(colour_)), p_ % 2 == 0 ? 1 : -1);
        Poly den;
        poly_add(den, Exps{}, 1);
        for (int a = 0; a < n_; ++a) {
            if (nu[a] != colour_) {
                num = poly_mul(num, R.q_poly(colour_, nu[a], t, a));
            } else {
                Poly lin;
                poly_add(lin, unit_exps(t), 1);
                poly_add(lin, unit_exps(a), -1);
                den = poly_mul(den, poly_mul(lin, lin));
            }
        }
        TSplit rem = split_t(num, t);
        TSplit sd = split_t(den, t);
        const int ds = sd.rbegin()->first;
        drop_zeros(rem);
        while (!rem.empty() && rem.rbegin()->first >= ds) {
            const int top = rem.rbegin()->first;
            Poly lead = rem.rbegin()->second;
            const int m = top - ds;
            auto& q = coeffs.try_emplace(m, n_).first->second;
            q.add(S.from_poly(lead, nu));
            for (auto& [e, c] : sd) {
                Poly prod = poly_mul(lead, c);
                for (auto& [x, v] : prod) poly_add(rem[m + e], x, -v);
            }
            drop_zeros(rem);
        }
    }
    TPoly out;
    for (auto& [m, acc] : coeffs) {
        if (static_cast<int>(out.size()) <= m) out.resize(m + 1, Elem(n_));
        out[m] = base_->reduce(acc.finish());
    }
    trim(out);
    return out;
}

}  // namespace klr
