#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "klr/cartan.hpp"
#include "klr/perm.hpp"
#include "klr/qspec.hpp"

namespace klr {

using Scalar = mpq_class;
using Seq = std::array<std::uint8_t, kMaxStrands>;
using Exps = std::array<std::uint16_t, kMaxStrands>;

Seq make_seq(const std::vector<int>& entries);
std::vector<int> seq_entries(const Seq& nu, int n);

// tau_w x^a e(nu), with nu the idempotent on the right.
struct Mono {
    std::uint16_t w = 0;
    Seq nu{};
    Exps a{};
    friend bool operator==(const Mono&, const Mono&) = default;
};

// nu lex, then permutation index (length, canonical word), then exponents lex
bool operator<(const Mono& x, const Mono& y);

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept;
};

class Elem {
public:
    using Term = std::pair<Mono, Scalar>;

    Elem() = default;
    explicit Elem(int n) : n_(n) {}
    static Elem of(int n, const Mono& m, const Scalar& c = 1);

    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Mono& m) const;

    Elem operator-() const;
    friend Elem operator+(const Elem& x, const Elem& y);
    friend Elem operator-(const Elem& x, const Elem& y);
    friend Elem operator*(const Scalar& c, const Elem& x);
    friend bool operator==(const Elem& x, const Elem& y) { return x.terms_ == y.terms_; }

private:
    friend class Accumulator;
    int n_ = -1;
    std::vector<Term> terms_;
};

// Unordered sum of scaled terms, sorted on finish().
class Accumulator {
public:
    explicit Accumulator(int n = -1) : n_(n) {}
    void add(const Mono& m, const Scalar& c);
    void add(const Elem& e, const Scalar& c = 1);
    Elem finish();

private:
    int n_;
    std::unordered_map<Mono, Scalar, MonoHash> map_;
};

// Polynomial in x_1..x_n, keyed by exponent vectors.
using Poly = std::map<Exps, Scalar>;

void poly_add(Poly& p, const Exps& e, const Scalar& c);
Poly poly_mul(const Poly& p, const Poly& q);
Exps unit_exps(int k, int power = 1);

// R(n) for a fixed Cartan datum and Q-polynomials. Positions and letters
// are 0-based throughout; tau_l swaps strands l and l+1.
class KLRAlgebra {
public:
    KLRAlgebra(CartanDatum datum, QSpec qspec, int n);

    int n() const { return n_; }
    const CartanDatum& datum() const { return datum_; }
    const QSpec& qspec() const { return qspec_; }
    const PermTable& perms() const { return *perms_; }

    Seq left_idem(const Mono& m) const { return perms_->act(m.w, m.nu); }
    int crossing_degree(int w, const Seq& nu) const;
    int degree(const Mono& m) const;
    // degree of a nonzero homogeneous element
    std::optional<int> degree(const Elem& e) const;
    RootCombo weight(const Seq& nu) const;
    // I^beta in lex order
    std::vector<Seq> sequences(const RootCombo& beta) const;
    std::vector<Seq> all_sequences() const;
    std::vector<Mono> basis_monomials(const RootCombo& beta, int d) const;
    // min and max of crossing_degree over (w, nu), nu in I^beta
    std::pair<int, int> crossing_degree_range(const RootCombo& beta) const;

    Mono mono(int w, const Exps& a, const Seq& nu) const;
    Elem elem(const Mono& m, const Scalar& c = 1) const { return Elem::of(n_, m, c); }
    Elem idem(const Seq& nu) const;
    Elem unit(const std::vector<Seq>& seqs) const;
    Elem x(int k, const std::vector<Seq>& seqs) const;
    Elem tau(int l, const std::vector<Seq>& seqs) const;
    Elem from_poly(const Poly& p, const Seq& nu) const;

    const Elem& left_x(int k, const Mono& m) const;
    const Elem& left_tau(int l, const Mono& m) const;
    Elem left_x(int k, const Elem& e) const;
    Elem left_tau(int l, const Elem& e) const;
    // tau_{w_1} ... tau_{w_r} e
    Elem left_word(const Word& word, const Elem& e) const;
    Elem left_poly(const Poly& p, const Elem& e) const;
    Elem right_x(const Elem& e, int k) const;
    Elem right_tau(const Mono& m, int l) const;
    Elem right_tau(const Elem& e, int l) const;
    Elem right_word(const Elem& e, const Word& word) const;
    Elem right_poly(const Elem& e, const Poly& p) const;
    Elem multiply(const Mono& m1, const Mono& m2) const;
    Elem multiply(const Elem& x, const Elem& y) const;
    Elem psi(const Elem& e) const;

    // Q_{i,j}(x_k, x_l)
    Poly q_poly(int i, int j, int k, int l) const;
    // (Q_{i,j}(x_a,x_b) - Q_{i,j}(x_c,x_b)) / (x_a - x_c)
    Poly qbar_poly(int i, int j, int a, int b, int c) const;
    // g_a over the given sequences
    Elem intertwiner(int a, const std::vector<Seq>& seqs) const;
    // sum_nu x_k^{<h_{nu_k}, Lambda>} e(nu)
    Elem cyc_poly(const DominantWeight& lam, int k, const std::vector<Seq>& seqs) const;

    std::string format(const Mono& m) const;
    std::string format(const Elem& e) const;
    std::size_t cache_size() const;

private:
    struct Key {
        std::uint8_t gen;
        std::uint8_t idx;
        Mono m;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    Elem compute_left_x(int k, const Mono& m) const;
    Elem compute_left_tau(int l, const Mono& m) const;
    // tau_{from} X - tau_{to} X for two reduced words of one permutation
    Elem braid_diff(const Word& from, const Word& to, const Mono& x) const;
    Elem eval_reduced(const Word& word, const Mono& x) const;
    void check(const Elem& e) const;

    CartanDatum datum_;
    QSpec qspec_;
    int n_;
    const PermTable* perms_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Key, Elem, KeyHash> memo_;
};

}  // namespace klr
