#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace klr {

// Element of Z[q, q^-1]. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::int64_t c, int exponent = 0);
    static LaurentPoly q(int exponent) { return LaurentPoly(1, exponent); }

    const std::map<int, std::int64_t>& terms() const { return terms_; }
    std::int64_t coeff(int exponent) const;
    void add_term(int exponent, std::int64_t c);

    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;
    int max_exponent() const;
    std::int64_t eval_at_one() const;
    bool nonnegative() const;

    // q -> q^{-1}
    LaurentPoly bar() const;
    // q -> q^k
    LaurentPoly substitute_power(int k) const;
    LaurentPoly shifted(int s) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // exact division; throws if the divisor does not divide evenly
    LaurentPoly exact_div(const LaurentPoly& d) const;

    // ascending form: "1 + q^2", "-q^-1 + 3q"
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::map<int, std::int64_t> terms_;
};

}  // namespace klr
