#include "klr/uqmod.hpp"

#include <stdexcept>

namespace klr {

LaurentPoly quantum_integer(int m, int d) {
    LaurentPoly out;
    const int sign = m < 0 ? -1 : 1;
    const int a = m < 0 ? -m : m;
    for (int k = 0; k < a; ++k) out.add_term(d * (a - 1 - 2 * k), sign);
    return out;
}

std::map<FMonomial, LaurentPoly> e_action(const CartanDatum& D, const DominantWeight& lam, int i, const FMonomial& nu) {
    std::map<FMonomial, LaurentPoly> out;
    int pairing = lam.levels.at(i);
    for (int j = static_cast<int>(nu.size()) - 1; j >= 0; --j) {
        if (nu[j] == i) {
            FMonomial rest = nu;
            rest.erase(rest.begin() + j);
            out[rest] += quantum_integer(pairing, D.d(i));
            if (out[rest].is_zero()) out.erase(rest);
        }
        pairing -= D.a(i, nu[j]);
    }
    return out;
}

std::vector<FMonomial> weight_sequences(const CartanDatum& D, const RootCombo& beta) {
    D.check_root(beta);
    std::vector<FMonomial> out;
    FMonomial cur;
    std::vector<int> left = beta.coeffs;
    const int n = beta.height();
    auto rec = [&](auto& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < D.rank(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            cur.push_back(i);
            self(self);
            cur.pop_back();
            ++left[i];
        }
    };
    rec(rec);
    return out;
}

ShapovalovForm::ShapovalovForm(CartanDatum D, DominantWeight lam) : D_(std::move(D)), lam_(std::move(lam)) {
    D_.check_weight(lam_);
}

LaurentPoly ShapovalovForm::pair(const FMonomial& mu, const FMonomial& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("weight mismatch");
    if (mu.empty()) return LaurentPoly(1);
    auto key = std::make_pair(mu, nu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    FMonomial tail(mu.begin() + 1, mu.end());
    LaurentPoly out;
    for (auto& [rest, c] : e_action(D_, lam_, mu.front(), nu)) out += c * pair(tail, rest);
    memo_.emplace(key, out);
    return out;
}

GramMatrix ShapovalovForm::gram(const RootCombo& beta) {
    auto seqs = weight_sequences(D_, beta);
    GramMatrix g(seqs.size(), std::vector<LaurentPoly>(seqs.size()));
    for (std::size_t a = 0; a < seqs.size(); ++a)
        for (std::size_t b = 0; b < seqs.size(); ++b) g[a][b] = pair(seqs[a], seqs[b]);
    return g;
}

int ShapovalovForm::weight_dim(const RootCombo& beta) { return laurent_rank(gram(beta)); }

LaurentPoly ShapovalovForm::predicted_dim(const FMonomial& mu, const FMonomial& nu) {
    RootCombo bm{std::vector<int>(D_.rank(), 0)}, bn = bm;
    for (int i : mu) ++bm.coeffs.at(i);
    for (int i : nu) ++bn.coeffs.at(i);
    if (bm != bn) throw std::invalid_argument("weight mismatch");
    const int twice = 2 * D_.weight_root_pair(lam_, bm) - D_.sym_form(bm, bm);
    if (twice % 2 != 0) throw std::logic_error("odd normalization exponent");
    return pair(mu, nu).shifted(twice / 2);
}

int laurent_rank(GramMatrix m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m.front().size());
    LaurentPoly prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).exact_div(prev);
            m[i][c] = LaurentPoly();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

GramMatrix gram(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta) {
    return ShapovalovForm(D, lam).gram(beta);
}

int weight_dim(const CartanDatum& D, const DominantWeight& lam, const RootCombo& beta) {
    return ShapovalovForm(D, lam).weight_dim(beta);
}

LaurentPoly predicted_dim(const CartanDatum& D, const DominantWeight& lam, const FMonomial& mu, const FMonomial& nu) {
    return ShapovalovForm(D, lam).predicted_dim(mu, nu);
}

}  // namespace klr
