#include "klr/cartan.hpp"

#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace klr {

int RootCombo::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

bool RootCombo::nonnegative() const {
    for (int c : coeffs)
        if (c < 0) return false;
    return true;
}

RootCombo RootCombo::plus(int i, int times) const {
    RootCombo r = *this;
    r.coeffs.at(i) += times;
    return r;
}

CartanDatum CartanDatum::build(const Matrix& a, std::vector<std::string> labels) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("cartan.matrix: empty matrix");
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("cartan.matrix: matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) throw std::invalid_argument("cartan.matrix: a_ii = 2 violated at i=" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                throw std::invalid_argument("cartan.matrix: a_ij <= 0 violated at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("cartan.matrix: a_ij = 0 iff a_ji = 0 violated at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    if (labels.size() != n) throw std::invalid_argument("cartan.labels: size does not match matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) throw std::invalid_argument("cartan.labels: duplicate label " + labels[i]);

    // propagate d_j = d_i a_ij / a_ji along the connectivity graph
    std::vector<mpq_class> d(n, mpq_class(0));
    for (std::size_t root = 0; root < n; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0) continue;
                mpq_class dj = d[i] * a[i][j] / a[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("cartan.matrix: matrix is not symmetrizable");
                }
            }
        }
    }
    // clear denominators, then divide by the gcd of each connected component
    mpz_class lcm = 1;
    for (auto& x : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> di(n);
    for (std::size_t i = 0; i < n; ++i) di[i] = mpz_class(d[i] * lcm);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (comp[r] >= 0) continue;
        std::vector<std::size_t> stack{r};
        comp[r] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && a[i][j] != 0 && comp[j] < 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    CartanDatum out;
    out.a_ = a;
    out.labels_ = std::move(labels);
    out.d_.assign(n, 0);
    for (int c = 0; c < ncomp; ++c) {
        mpz_class g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di[i].get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) out.d_[i] = static_cast<int>(mpz_class(di[i] / g).get_si());
    }
    return out;
}

int CartanDatum::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown label " + name);
}

int CartanDatum::sym_form(const RootCombo& b1, const RootCombo& b2) const {
    check_root(b1);
    check_root(b2);
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += b1.coeffs[i] * b2.coeffs[j] * sym(i, j);
    return s;
}

int CartanDatum::coroot_pair(int i, const DominantWeight& lam, const RootCombo& beta) const {
    check_weight(lam);
    check_root(beta);
    if (i < 0 || i >= rank()) throw std::out_of_range("index out of range");
    int s = lam.levels[i];
    for (int j = 0; j < rank(); ++j) s -= beta.coeffs[j] * a_[i][j];
    return s;
}

int CartanDatum::root_pair(int i, const DominantWeight& lam, const RootCombo& beta) const {
    return d_[i] * coroot_pair(i, lam, beta);
}

int CartanDatum::weight_root_pair(const DominantWeight& lam, const RootCombo& beta) const {
    check_weight(lam);
    check_root(beta);
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += beta.coeffs[i] * d_[i] * lam.levels[i];
    return s;
}

RootCombo CartanDatum::simple_root(int i) const {
    RootCombo r = zero_root();
    r.coeffs.at(i) = 1;
    return r;
}

void CartanDatum::check_weight(const DominantWeight& lam) const {
    if (static_cast<int>(lam.levels.size()) != rank()) throw std::invalid_argument("weight has wrong rank");
}

void CartanDatum::check_root(const RootCombo& beta) const {
    if (static_cast<int>(beta.coeffs.size()) != rank()) throw std::invalid_argument("root combination has wrong rank");
}

LaurentPoly qint(int n, int d) {
    LaurentPoly r;
    int m = n < 0 ? -n : n;
    for (int k = 0; k < m; ++k) r.add_term(d * (m - 1 - 2 * k), n < 0 ? -1 : 1);
    return r;
}

LaurentPoly qfact(int n, int d) {
    if (n < 0) throw std::domain_error("qfact of negative integer");
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r = r * qint(k, d);
    return r;
}

LaurentPoly qbinom(int n, int k, int d) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("qbinom requires 0 <= k <= n");
    return qfact(n, d).exact_div(qfact(k, d) * qfact(n - k, d));
}

}  // namespace klr
