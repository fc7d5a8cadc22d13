#include "klr/simples.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>

#include "klr/linalg.hpp"
#include "klr/tensor.hpp"

namespace klr {

namespace {

using Vec = std::vector<Scalar>;

struct Quotient {
    const CycAlgebra& A;
    Echelon rad;

    Vec coords(const Elem& e) const {
        Vec v(A.dim());
        for (auto& [m, c] : e.terms()) {
            const int k = A.basis_index(m);
            if (k < 0) throw std::logic_error("element not reduced");
            v[k] = c;
        }
        return v;
    }
    Vec modrad(const Elem& e) const {
        SparseVec s;
        const Vec v = coords(e);
        for (int k = 0; k < A.dim(); ++k)
            if (v[k] != 0) s.emplace_back(k, v[k]);
        Vec out(A.dim());
        for (auto& [k, c] : rad.reduce(s)) out[k] = c;
        return out;
    }
    Elem elem(const Vec& v) const {
        Accumulator acc(A.klr().n());
        for (int k = 0; k < A.dim(); ++k)
            if (v[k] != 0) acc.add(A.basis()[k], v[k]);
        return acc.finish();
    }
    Elem mul(const Vec& a, const Vec& b) const { return A.multiply(elem(a), elem(b)); }
};

bool is_zero(const Vec& v) {
    for (auto& c : v)
        if (c != 0) return false;
    return true;
}

Vec axpy(const Vec& x, const Scalar& c, const Vec& y) {
    Vec out = x;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * y[k];
    return out;
}

// monic minimal polynomial coefficients c_0..c_{r-1} (x^r + ... ) of z acting on A/rad
std::vector<Scalar> minimal_polynomial(const Quotient& Q, const Vec& z, const Vec& one) {
    std::vector<Vec> powers{one};
    for (;;) {
        Vec next = Q.modrad(Q.mul(powers.back(), z));
        const int r = static_cast<int>(powers.size());
        DenseMatrix m(one.size(), Vec(r + 1));
        for (std::size_t k = 0; k < one.size(); ++k) {
            for (int j = 0; j < r; ++j) m[k][j] = powers[j][k];
            m[k][r] = next[k];
        }
        auto ns = nullspace(m, r + 1);
        if (!ns.empty()) {
            const Vec& v = ns.front();
            std::vector<Scalar> out(r);
            for (int j = 0; j < r; ++j) out[j] = v[j] / v[r];
            return out;
        }
        powers.push_back(next);
    }
}

// roots of the monic polynomial, all rational and simple, or nothing
std::optional<std::vector<Scalar>> rational_roots(const std::vector<Scalar>& c) {
    const int r = static_cast<int>(c.size());
    if (r == 0) return std::vector<Scalar>{};
    using C = std::complex<long double>;
    auto eval = [&](C x) {
        C v = 1;
        for (int j = r - 1; j >= 0; --j) v = v * x + C(c[j].get_d());
        return v;
    };
    std::vector<C> z(r);
    for (int j = 0; j < r; ++j) z[j] = std::pow(C(0.4L, 0.9L), j);
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int j = 0; j < r; ++j) {
            C den = 1;
            for (int l = 0; l < r; ++l)
                if (l != j) den *= z[j] - z[l];
            C step = eval(z[j]) / den;
            z[j] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15L) break;
    }
    std::vector<Scalar> roots;
    for (const C& x : z) {
        // continued fraction with bounded denominator
        long double v = x.real();
        mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
        Scalar best;
        for (int step = 0; step < 40; ++step) {
            long double fl = std::floor(v);
            mpz_class a(static_cast<long>(fl));
            mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
            h0 = h1, h1 = h2, k0 = k1, k1 = k2;
            best = Scalar(h1, k1);
            best.canonicalize();
            if (std::fabs(v - fl) < 1e-12L || k1 > 1000000) break;
            v = 1 / (v - fl);
        }
        Scalar val = 1;
        for (int j = r - 1; j >= 0; --j) val = val * best + c[j];
        if (val != 0) return std::nullopt;
        for (const Scalar& s : roots)
            if (s == best) return std::nullopt;
        roots.push_back(best);
    }
    return roots;
}

}  // namespace

SimplesReport count_simples(const CycAlgebra& A) {
    SimplesReport out;
    out.dim = A.dim();
    if (A.dim() == 0) {
        out.split = true;
        return out;
    }
    const KLRAlgebra& R = A.klr();
    const int N = A.dim();
    std::map<int, std::vector<int>> by_degree;
    for (int k = 0; k < N; ++k) by_degree[R.degree(A.basis()[k])].push_back(k);
    auto elem = [&](int k) { return R.elem(A.basis()[k]); };

    // traces of left multiplication, nonzero only in degree 0
    std::vector<Scalar> trace(N);
    if (by_degree.count(0))
        for (int k : by_degree[0])
            for (int j = 0; j < N; ++j) trace[k] += A.multiply(elem(k), elem(j)).coeff(A.basis()[j]);

    Quotient Q{A, {}};
    for (auto& [d, ks] : by_degree) {
        auto it = by_degree.find(-d);
        DenseMatrix T(ks.size());
        const std::size_t cols = it == by_degree.end() ? 0 : it->second.size();
        for (std::size_t a = 0; a < ks.size(); ++a) {
            T[a].assign(cols, 0);
            for (std::size_t b = 0; b < cols; ++b) {
                Elem p = A.multiply(elem(ks[a]), elem(it->second[b]));
                for (auto& [m, c] : p.terms()) T[a][b] += c * trace[A.basis_index(m)];
            }
        }
        // left kernel of T: vectors x with x^T T = 0
        DenseMatrix Tt(cols, Vec(ks.size()));
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = 0; b < cols; ++b) Tt[b][a] = T[a][b];
        for (const Vec& x : nullspace(Tt, static_cast<int>(ks.size()))) {
            SparseVec s;
            std::vector<std::pair<int, Scalar>> entries;
            for (std::size_t a = 0; a < ks.size(); ++a)
                if (x[a] != 0) entries.emplace_back(ks[a], x[a]);
            std::sort(entries.begin(), entries.end(), [](auto& u, auto& v) { return u.first < v.first; });
            for (auto& e : entries) s.push_back(e);
            Q.rad.insert(s);
        }
    }
    Q.rad.make_reduced();
    out.radical_dim = Q.rad.rank();

    // centre of A/rad lives in degree 0
    std::vector<int> comp;
    if (by_degree.count(0))
        for (int k : by_degree[0])
            if (!Q.rad.is_pivot(k)) comp.push_back(k);
    const auto gens = algebra_generators(A);
    DenseMatrix sys;
    std::vector<std::vector<Vec>> images(comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j)
        for (const Elem& g : gens) {
            Elem cm = A.multiply(elem(comp[j]), g) - A.multiply(g, elem(comp[j]));
            images[j].push_back(Q.modrad(cm));
        }
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int k = 0; k < N; ++k) {
            Vec row(comp.size());
            bool any = false;
            for (std::size_t j = 0; j < comp.size(); ++j) {
                row[j] = images[j][g][k];
                any = any || row[j] != 0;
            }
            if (any) sys.push_back(row);
        }
    DenseMatrix centre = nullspace(sys, static_cast<int>(comp.size()));
    out.count = static_cast<int>(centre.size());

    std::vector<Vec> zs;
    for (const Vec& y : centre) {
        Vec z(N);
        for (std::size_t j = 0; j < comp.size(); ++j) z[comp[j]] = y[j];
        zs.push_back(z);
    }
    const Vec one = Q.modrad(A.unit());
    for (int attempt = 0; attempt < 8 && !out.split; ++attempt) {
        Vec z(N);
        for (std::size_t j = 0; j < zs.size(); ++j) {
            const long w = static_cast<long>((j * 7 + 3) * (attempt + 1) % 23) - 11;
            z = axpy(z, w, zs[j]);
        }
        auto mp = minimal_polynomial(Q, z, one);
        auto roots = rational_roots(mp);
        if (!roots) break;
        if (static_cast<int>(roots->size()) != out.count) continue;
        std::vector<Vec> idem;
        Vec sum(N);
        for (const Scalar& r : *roots) {
            Vec e = one;
            for (const Scalar& s : *roots) {
                if (s == r) continue;
                Vec f = axpy(z, -s, one);
                for (auto& c : f) c /= (r - s);
                e = Q.modrad(Q.mul(e, f));
            }
            idem.push_back(e);
            sum = axpy(sum, 1, e);
        }
        bool ok = is_zero(axpy(sum, -1, one));
        for (const Vec& e : idem) {
            ok = ok && !is_zero(e) && is_zero(axpy(Q.modrad(Q.mul(e, e)), -1, e));
            for (const Elem& g : gens)
                ok = ok && is_zero(Q.modrad(A.multiply(Q.elem(e), g) - A.multiply(g, Q.elem(e))));
        }
        if (!ok) continue;
        out.split = true;
        for (const Vec& e : idem) out.idempotents.push_back(Q.elem(e));
    }
    return out;
}

}  // namespace klr
