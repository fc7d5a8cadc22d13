#include "klr/klr.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace klr {

namespace {

inline std::size_t mix(std::size_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Seq make_seq(const std::vector<int>& entries) {
    if (entries.size() > static_cast<std::size_t>(kMaxStrands)) throw std::out_of_range("sequence too long");
    Seq nu{};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k] < 0 || entries[k] > 255) throw std::out_of_range("sequence entry out of range");
        nu[k] = static_cast<std::uint8_t>(entries[k]);
    }
    return nu;
}

std::vector<int> seq_entries(const Seq& nu, int n) { return std::vector<int>(nu.begin(), nu.begin() + n); }

bool operator<(const Mono& x, const Mono& y) {
    if (x.nu != y.nu) return x.nu < y.nu;
    if (x.w != y.w) return x.w < y.w;
    return x.a < y.a;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
    std::size_t h = m.w;
    std::uint64_t nu = 0;
    for (auto c : m.nu) nu = (nu << 8) | c;
    h = mix(h, nu);
    std::uint64_t lo = 0, hi = 0;
    for (int k = 0; k < 4; ++k) lo = (lo << 16) | m.a[k];
    for (int k = 4; k < 8; ++k) hi = (hi << 16) | m.a[k];
    h = mix(h, lo);
    return mix(h, hi);
}

Elem Elem::of(int n, const Mono& m, const Scalar& c) {
    Elem e(n);
    if (c != 0) e.terms_.emplace_back(m, c);
    return e;
}

Scalar Elem::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Mono& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

Elem Elem::operator-() const {
    Elem r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

int merged_n(const Elem& x, const Elem& y) {
    if (x.n() >= 0 && y.n() >= 0 && x.n() != y.n()) throw std::invalid_argument("ambient strand counts differ");
    return x.n() >= 0 ? x.n() : y.n();
}

Elem merge(const Elem& x, const Elem& y, int sign) {
    Accumulator acc(merged_n(x, y));
    acc.add(x);
    acc.add(y, sign);
    return acc.finish();
}

}  // namespace

Elem operator+(const Elem& x, const Elem& y) { return merge(x, y, 1); }
Elem operator-(const Elem& x, const Elem& y) { return merge(x, y, -1); }

Elem operator*(const Scalar& c, const Elem& x) {
    if (c == 0) return Elem(x.n());
    Elem r = x;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

void Accumulator::add(const Mono& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = map_.try_emplace(m, c);
    if (!fresh) it->second += c;
}

void Accumulator::add(const Elem& e, const Scalar& c) {
    if (e.n() >= 0) {
        if (n_ >= 0 && n_ != e.n()) throw std::invalid_argument("ambient strand counts differ");
        n_ = e.n();
    }
    if (c == 0) return;
    if (c == 1) {
        for (auto& [m, v] : e.terms()) add(m, v);
    } else {
        for (auto& [m, v] : e.terms()) add(m, v * c);
    }
}

Elem Accumulator::finish() {
    Elem e(n_);
    e.terms_.reserve(map_.size());
    for (auto& [m, c] : map_)
        if (c != 0) e.terms_.emplace_back(m, std::move(c));
    std::sort(e.terms_.begin(), e.terms_.end(), [](const Elem::Term& x, const Elem::Term& y) { return x.first < y.first; });
    map_.clear();
    return e;
}

void poly_add(Poly& p, const Exps& e, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = p.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r;
    for (auto& [e1, c1] : p)
        for (auto& [e2, c2] : q) {
            Exps e{};
            for (int k = 0; k < kMaxStrands; ++k) e[k] = static_cast<std::uint16_t>(e1[k] + e2[k]);
            poly_add(r, e, c1 * c2);
        }
    return r;
}

Exps unit_exps(int k, int power) {
    Exps e{};
    e[k] = static_cast<std::uint16_t>(power);
    return e;
}

std::size_t KLRAlgebra::KeyHash::operator()(const Key& k) const noexcept {
    return mix(MonoHash{}(k.m), (static_cast<std::uint64_t>(k.gen) << 8) | k.idx);
}

KLRAlgebra::KLRAlgebra(CartanDatum datum, QSpec qspec, int n)
    : datum_(std::move(datum)), qspec_(std::move(qspec)), n_(n), perms_(&PermTable::get(n)) {
    qspec_.validate(datum_);
}

int KLRAlgebra::crossing_degree(int w, const Seq& nu) const {
    const OneLine& p = perms_->one_line(w);
    int d = 0;
    for (int k = 0; k < n_; ++k)
        for (int l = k + 1; l < n_; ++l)
            if (p[k] > p[l]) d -= datum_.sym(nu[k], nu[l]);
    return d;
}

int KLRAlgebra::degree(const Mono& m) const {
    int d = crossing_degree(m.w, m.nu);
    for (int k = 0; k < n_; ++k) d += m.a[k] * datum_.sym(m.nu[k], m.nu[k]);
    return d;
}

std::optional<int> KLRAlgebra::degree(const Elem& e) const {
    if (e.is_zero()) return std::nullopt;
    int d = degree(e.terms().front().first);
    for (auto& [m, c] : e.terms())
        if (degree(m) != d) return std::nullopt;
    return d;
}

RootCombo KLRAlgebra::weight(const Seq& nu) const {
    RootCombo r = datum_.zero_root();
    for (int k = 0; k < n_; ++k) r.coeffs.at(nu[k]) += 1;
    return r;
}

std::vector<Seq> KLRAlgebra::sequences(const RootCombo& beta) const {
    datum_.check_root(beta);
    if (beta.height() != n_ || !beta.nonnegative()) throw std::invalid_argument("root height does not match strand count");
    std::vector<Seq> out;
    Seq cur{};
    std::vector<int> left = beta.coeffs;
    auto rec = [&](auto& self, int k) -> void {
        if (k == n_) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < datum_.rank(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            cur[k] = static_cast<std::uint8_t>(i);
            self(self, k + 1);
            ++left[i];
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Seq> KLRAlgebra::all_sequences() const {
    std::vector<Seq> out;
    Seq cur{};
    auto rec = [&](auto& self, int k) -> void {
        if (k == n_) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < datum_.rank(); ++i) {
            cur[k] = static_cast<std::uint8_t>(i);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Mono> KLRAlgebra::basis_monomials(const RootCombo& beta, int d) const {
    std::vector<Mono> out;
    for (const Seq& nu : sequences(beta)) {
        for (int w = 0; w < perms_->size(); ++w) {
            int rem = d - crossing_degree(w, nu);
            if (rem < 0) continue;
            Mono m{static_cast<std::uint16_t>(w), nu, {}};
            auto rec = [&](auto& self, int k, int left) -> void {
                if (k == n_) {
                    if (left == 0) out.push_back(m);
                    return;
                }
                int c = datum_.sym(nu[k], nu[k]);
                for (int e = 0; e * c <= left; ++e) {
                    m.a[k] = static_cast<std::uint16_t>(e);
                    self(self, k + 1, left - e * c);
                }
                m.a[k] = 0;
            };
            rec(rec, 0, rem);
        }
    }
    return out;
}

std::pair<int, int> KLRAlgebra::crossing_degree_range(const RootCombo& beta) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const Seq& nu : sequences(beta))
        for (int w = 0; w < perms_->size(); ++w) {
            int d = crossing_degree(w, nu);
            if (first || d < lo) lo = d;
            if (first || d > hi) hi = d;
            first = false;
        }
    return {lo, hi};
}

Mono KLRAlgebra::mono(int w, const Exps& a, const Seq& nu) const {
    if (w < 0 || w >= perms_->size()) throw std::out_of_range("permutation index out of range");
    return Mono{static_cast<std::uint16_t>(w), nu, a};
}

Elem KLRAlgebra::idem(const Seq& nu) const { return elem(Mono{0, nu, {}}); }

Elem KLRAlgebra::unit(const std::vector<Seq>& seqs) const {
    Accumulator acc(n_);
    for (auto& nu : seqs) acc.add(Mono{0, nu, {}}, 1);
    return acc.finish();
}

Elem KLRAlgebra::x(int k, const std::vector<Seq>& seqs) const {
    if (k < 0 || k >= n_) throw std::out_of_range("position out of range");
    Accumulator acc(n_);
    for (auto& nu : seqs) acc.add(Mono{0, nu, unit_exps(k)}, 1);
    return acc.finish();
}

Elem KLRAlgebra::tau(int l, const std::vector<Seq>& seqs) const {
    if (l < 0 || l + 1 >= n_) throw std::out_of_range("position out of range");
    int s = perms_->right_mul(0, l);
    Accumulator acc(n_);
    for (auto& nu : seqs) acc.add(Mono{static_cast<std::uint16_t>(s), nu, {}}, 1);
    return acc.finish();
}

Elem KLRAlgebra::from_poly(const Poly& p, const Seq& nu) const {
    Accumulator acc(n_);
    for (auto& [e, c] : p) acc.add(Mono{0, nu, e}, c);
    return acc.finish();
}

const Elem& KLRAlgebra::left_x(int k, const Mono& m) const {
    Key key{0, static_cast<std::uint8_t>(k), m};
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Elem r = compute_left_x(k, m);
    std::unique_lock lock(mu_);
    return memo_.emplace(key, std::move(r)).first->second;
}

const Elem& KLRAlgebra::left_tau(int l, const Mono& m) const {
    Key key{1, static_cast<std::uint8_t>(l), m};
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Elem r = compute_left_tau(l, m);
    std::unique_lock lock(mu_);
    return memo_.emplace(key, std::move(r)).first->second;
}

Elem KLRAlgebra::compute_left_x(int k, const Mono& m) const {
    if (m.w == 0) {
        Mono r = m;
        ++r.a[k];
        return elem(r);
    }
    int s = perms_->first_letter(m.w);
    Mono rest = m;
    rest.w = static_cast<std::uint16_t>(perms_->tail(m.w));
    int sk = k == s ? s + 1 : (k == s + 1 ? s : k);
    Accumulator acc(n_);
    acc.add(left_tau(s, left_x(sk, rest)));
    Seq mu = left_idem(rest);
    if (mu[s] == mu[s + 1]) {
        if (k == s) acc.add(rest, -1);
        if (k == s + 1) acc.add(rest, 1);
    }
    return acc.finish();
}

Elem KLRAlgebra::compute_left_tau(int l, const Mono& m) const {
    int v = perms_->left_mul(l, m.w);
    Mono base = m;
    base.w = 0;
    if (perms_->length(v) > perms_->length(m.w)) {
        if (perms_->first_letter(v) == l) {
            Mono r = m;
            r.w = static_cast<std::uint16_t>(v);
            return elem(r);
        }
        Word word{static_cast<std::uint8_t>(l)};
        const Word& tail = perms_->word(m.w);
        word.insert(word.end(), tail.begin(), tail.end());
        return eval_reduced(word, base);
    }
    Word lw{static_cast<std::uint8_t>(l)};
    const Word& vw = perms_->word(v);
    lw.insert(lw.end(), vw.begin(), vw.end());
    Elem delta = braid_diff(perms_->word(m.w), lw, base);
    Mono mv = m;
    mv.w = static_cast<std::uint16_t>(v);
    Seq mu = left_idem(mv);
    Accumulator acc(n_);
    if (mu[l] != mu[l + 1]) acc.add(left_poly(q_poly(mu[l], mu[l + 1], l, l + 1), elem(mv)));
    acc.add(left_tau(l, delta));
    return acc.finish();
}

Elem KLRAlgebra::eval_reduced(const Word& word, const Mono& x) const {
    int w = perms_->from_word(word);
    Mono r = x;
    r.w = static_cast<std::uint16_t>(w);
    if (word == perms_->word(w)) return elem(r);
    return elem(r) + braid_diff(word, perms_->word(w), x);
}

Elem KLRAlgebra::braid_diff(const Word& from, const Word& to, const Mono& x) const {
    Accumulator acc(n_);
    if (from == to) return acc.finish();
    const std::vector<PermTable::Move>& moves = perms_->path(from, to);
    Word cur = from;
    for (const auto& mv : moves) {
        const int p = mv.pos;
        if (!mv.braid) {
            std::swap(cur[p], cur[p + 1]);
            continue;
        }
        const int s = cur[p], t = cur[p + 1];
        const int b = std::min(s, t);
        Word tail(cur.begin() + p + 3, cur.end());
        Seq rho = perms_->act(perms_->from_word(tail), x.nu);
        if (rho[b] == rho[b + 2]) {
            Elem e = left_word(tail, elem(x));
            e = left_poly(qbar_poly(rho[b], rho[b + 1], b, b + 1, b + 2), e);
            e = left_word(Word(cur.begin(), cur.begin() + p), e);
            acc.add(e, s == b ? -1 : 1);
        }
        cur[p] = cur[p + 2] = static_cast<std::uint8_t>(t);
        cur[p + 1] = static_cast<std::uint8_t>(s);
    }
    return acc.finish();
}

void KLRAlgebra::check(const Elem& e) const {
    if (e.n() >= 0 && e.n() != n_) throw std::invalid_argument("element has a different strand count");
}

Elem KLRAlgebra::left_x(int k, const Elem& e) const {
    check(e);
    if (k < 0 || k >= n_) throw std::out_of_range("position out of range");
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms()) acc.add(left_x(k, m), c);
    return acc.finish();
}

Elem KLRAlgebra::left_tau(int l, const Elem& e) const {
    check(e);
    if (l < 0 || l + 1 >= n_) throw std::out_of_range("position out of range");
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms()) acc.add(left_tau(l, m), c);
    return acc.finish();
}

Elem KLRAlgebra::left_word(const Word& word, const Elem& e) const {
    Elem r = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = left_tau(*it, r);
    return r;
}

Elem KLRAlgebra::left_poly(const Poly& p, const Elem& e) const {
    check(e);
    Accumulator acc(n_);
    for (auto& [ex, c] : p) {
        Elem t = e;
        for (int k = 0; k < n_; ++k)
            for (int r = 0; r < ex[k]; ++r) t = left_x(k, t);
        acc.add(t, c);
    }
    return acc.finish();
}

Elem KLRAlgebra::right_x(const Elem& e, int k) const {
    check(e);
    if (k < 0 || k >= n_) throw std::out_of_range("position out of range");
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms()) {
        Mono r = m;
        ++r.a[k];
        acc.add(r, c);
    }
    return acc.finish();
}

Elem KLRAlgebra::right_tau(const Mono& m, int l) const {
    if (l < 0 || l + 1 >= n_) throw std::out_of_range("position out of range");
    Key key{2, static_cast<std::uint8_t>(l), m};
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Seq nu = m.nu;
    std::swap(nu[l], nu[l + 1]);
    Exps sa = m.a;
    std::swap(sa[l], sa[l + 1]);
    Accumulator acc(n_);
    acc.add(left_word(perms_->word(m.w), elem(Mono{static_cast<std::uint16_t>(perms_->right_mul(0, l)), nu, sa})));
    if (nu[l] == nu[l + 1]) {
        int p = m.a[l], q = m.a[l + 1];
        int lo = std::min(p, q), hi = std::max(p, q);
        for (int r = 0; r < hi - lo; ++r) {
            Exps e = m.a;
            e[l] = static_cast<std::uint16_t>(lo + r);
            e[l + 1] = static_cast<std::uint16_t>(hi - 1 - r);
            acc.add(Mono{m.w, nu, e}, q > p ? 1 : -1);
        }
    }
    Elem r = acc.finish();
    std::unique_lock lock(mu_);
    return memo_.emplace(key, std::move(r)).first->second;
}

Elem KLRAlgebra::right_tau(const Elem& e, int l) const {
    check(e);
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms()) acc.add(right_tau(m, l), c);
    return acc.finish();
}

Elem KLRAlgebra::right_word(const Elem& e, const Word& word) const {
    Elem r = e;
    for (auto l : word) r = right_tau(r, l);
    return r;
}

Elem KLRAlgebra::right_poly(const Elem& e, const Poly& p) const {
    check(e);
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms())
        for (auto& [ex, pc] : p) {
            Mono r = m;
            for (int k = 0; k < n_; ++k) r.a[k] = static_cast<std::uint16_t>(r.a[k] + ex[k]);
            acc.add(r, c * pc);
        }
    return acc.finish();
}

Elem KLRAlgebra::multiply(const Mono& m1, const Mono& m2) const {
    if (m1.nu != left_idem(m2)) return Elem(n_);
    Elem t = elem(m2);
    for (int k = 0; k < n_; ++k)
        for (int r = 0; r < m1.a[k]; ++r) t = left_x(k, t);
    return left_word(perms_->word(m1.w), t);
}

Elem KLRAlgebra::multiply(const Elem& x, const Elem& y) const {
    check(x);
    check(y);
    Accumulator acc(n_);
    for (auto& [m1, c1] : x.terms())
        for (auto& [m2, c2] : y.terms()) acc.add(multiply(m1, m2), c1 * c2);
    return acc.finish();
}

Elem KLRAlgebra::psi(const Elem& e) const {
    check(e);
    Accumulator acc(n_);
    for (auto& [m, c] : e.terms()) {
        Elem t = elem(Mono{0, m.nu, m.a});
        const Word& w = perms_->word(m.w);
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = right_tau(t, *it);
        acc.add(t, c);
    }
    return acc.finish();
}

Poly KLRAlgebra::q_poly(int i, int j, int k, int l) const {
    Poly p;
    if (i == j) return p;
    for (auto& [pq, t] : qspec_.poly(i, j)) {
        Exps e{};
        e[k] = static_cast<std::uint16_t>(pq.first);
        e[l] = static_cast<std::uint16_t>(e[l] + pq.second);
        poly_add(p, e, t);
    }
    return p;
}

Poly KLRAlgebra::qbar_poly(int i, int j, int a, int b, int c) const {
    Poly p;
    if (i == j) return p;
    for (auto& [pq, t] : qspec_.poly(i, j)) {
        for (int r = 0; r < pq.first; ++r) {
            Exps e{};
            e[a] = static_cast<std::uint16_t>(r);
            e[c] = static_cast<std::uint16_t>(pq.first - 1 - r);
            e[b] = static_cast<std::uint16_t>(pq.second);
            poly_add(p, e, t);
        }
    }
    return p;
}

Elem KLRAlgebra::intertwiner(int a, const std::vector<Seq>& seqs) const {
    if (a < 0 || a + 1 >= n_) throw std::out_of_range("intertwiner position out of range");
    int s = perms_->right_mul(0, a);
    Poly sq;
    poly_add(sq, unit_exps(a + 1, 2), 1);
    poly_add(sq, unit_exps(a, 2), 1);
    Exps mixed{};
    mixed[a] = mixed[a + 1] = 1;
    poly_add(sq, mixed, -2);
    Accumulator acc(n_);
    for (auto& nu : seqs) {
        Mono t{static_cast<std::uint16_t>(s), nu, {}};
        if (nu[a] != nu[a + 1]) {
            acc.add(t, 1);
            continue;
        }
        acc.add(Mono{0, nu, unit_exps(a + 1)}, 1);
        acc.add(Mono{0, nu, unit_exps(a)}, -1);
        acc.add(left_poly(sq, elem(t)), -1);
    }
    return acc.finish();
}

Elem KLRAlgebra::cyc_poly(const DominantWeight& lam, int k, const std::vector<Seq>& seqs) const {
    datum_.check_weight(lam);
    if (k < 0 || k >= n_) throw std::out_of_range("position out of range");
    Accumulator acc(n_);
    for (auto& nu : seqs) acc.add(Mono{0, nu, unit_exps(k, lam.levels[nu[k]])}, 1);
    return acc.finish();
}

std::string KLRAlgebra::format(const Mono& m) const {
    std::ostringstream os;
    const Word& w = perms_->word(m.w);
    if (!w.empty()) {
        os << "t(";
        for (std::size_t r = 0; r < w.size(); ++r) os << (r ? " " : "") << int(w[r]) + 1;
        os << ")";
    }
    for (int k = 0; k < n_; ++k) {
        if (m.a[k] == 0) continue;
        os << "x" << k + 1;
        if (m.a[k] > 1) os << "^" << m.a[k];
    }
    os << "e(";
    for (int k = 0; k < n_; ++k) os << (k ? "," : "") << datum_.labels()[m.nu[k]];
    os << ")";
    return os.str();
}

std::string KLRAlgebra::format(const Elem& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : e.terms()) {
        bool neg = c < 0;
        Scalar mag = neg ? Scalar(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (mag != 1) os << mag.get_str() << "*";
        os << format(m);
    }
    return os.str();
}

std::size_t KLRAlgebra::cache_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
}

}  // namespace klr
