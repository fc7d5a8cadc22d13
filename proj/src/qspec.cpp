#include "klr/qspec.hpp"

#include <stdexcept>
#include <string>

namespace klr {

namespace {

const QSpec::Coeffs kEmpty;

std::string pair_name(const CartanDatum& datum, int i, int j) {
    return datum.labels()[i] + "," + datum.labels()[j];
}

}  // namespace

void QSpec::set(int i, int j, const Coeffs& c) {
    if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw std::out_of_range("q_coeffs: index out of range");
    if (i == j) throw std::invalid_argument("q_coeffs: Q_ii must be zero");
    Coeffs fwd, bwd;
    for (auto& [pq, t] : c) {
        if (t == 0) continue;
        fwd[pq] = t;
        bwd[{pq.second, pq.first}] = t;
    }
    q_[{i, j}] = fwd;
    q_[{j, i}] = bwd;
}

const QSpec::Coeffs& QSpec::poly(int i, int j) const {
    auto it = q_.find({i, j});
    return it == q_.end() ? kEmpty : it->second;
}

void QSpec::validate(const CartanDatum& datum) const {
    if (rank_ != datum.rank()) throw std::invalid_argument("q_coeffs: rank does not match cartan.matrix");
    for (int i = 0; i < rank_; ++i) {
        if (!poly(i, i).empty()) throw std::invalid_argument("q_coeffs: Q_ii must be zero for " + pair_name(datum, i, i));
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            const Coeffs& c = poly(i, j);
            for (auto& [pq, t] : c) {
                auto [p, q] = pq;
                if (p < 0 || q < 0)
                    throw std::invalid_argument("q_coeffs: negative exponent in pair " + pair_name(datum, i, j));
                if (datum.sym(i, i) * p + datum.sym(j, j) * q != -2 * datum.sym(i, j))
                    throw std::invalid_argument("q_coeffs: pair " + pair_name(datum, i, j) + " term (p,q)=(" +
                                                std::to_string(p) + "," + std::to_string(q) +
                                                ") violates homogeneity");
                auto mirror = poly(j, i).find({q, p});
                if (mirror == poly(j, i).end() || mirror->second != t)
                    throw std::invalid_argument("q_coeffs: pair " + pair_name(datum, i, j) + " is not symmetric");
            }
            auto lead = c.find({-datum.a(i, j), 0});
            if (lead == c.end() || lead->second == 0)
                throw std::invalid_argument("q_coeffs: pair " + pair_name(datum, i, j) + " has zero coefficient at (" +
                                            std::to_string(-datum.a(i, j)) + ",0)");
        }
    }
}

QSpec default_qspec(const CartanDatum& datum) {
    QSpec s(datum.rank());
    for (int i = 0; i < datum.rank(); ++i)
        for (int j = i + 1; j < datum.rank(); ++j) {
            QSpec::Coeffs c;
            c[{-datum.a(i, j), 0}] += 1;
            c[{0, -datum.a(j, i)}] += 1;
            s.set(i, j, c);
        }
    return s;
}

}  // namespace klr
