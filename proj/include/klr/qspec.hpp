#pragma once

#include <map>
#include <utility>

#include <gmpxx.h>

#include "klr/cartan.hpp"

namespace klr {

// Q_{ij}(u,v) = sum t_{i,j;p,q} u^p v^q, stored for every ordered pair i != j.
class QSpec {
public:
    using Coeffs = std::map<std::pair<int, int>, mpq_class>;

    QSpec() = default;
    explicit QSpec(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    // Sets Q_{ij} and the mirrored Q_{ji}(u,v) = Q_{ij}(v,u).
    void set(int i, int j, const Coeffs& c);
    const Coeffs& poly(int i, int j) const;
    // Throws std::invalid_argument naming the offending pair or (p,q).
    void validate(const CartanDatum& datum) const;

    friend bool operator==(const QSpec&, const QSpec&) = default;

private:
    int rank_ = 0;
    std::map<std::pair<int, int>, Coeffs> q_;
};

// u^{-a_ij} + v^{-a_ji}
QSpec default_qspec(const CartanDatum& datum);

}  // namespace klr
