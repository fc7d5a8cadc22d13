#include "klr/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace klr {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c, int exponent) {
    if (c != 0) terms_[exponent] = c;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exponent, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

std::int64_t LaurentPoly::eval_at_one() const {
    std::int64_t s = 0;
    for (auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

bool LaurentPoly::nonnegative() const {
    for (auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e + s] = c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [e1, c1] : a.terms_)
        for (auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    LaurentPoly rem = *this, quot;
    int dtop = d.max_exponent();
    std::int64_t lead = d.coeff(dtop);
    int dlow = d.min_exponent();
    while (!rem.is_zero()) {
        int top = rem.max_exponent();
        std::int64_t c = rem.coeff(top);
        if (c % lead != 0 || top - dtop < rem.min_exponent() - dlow)
            throw std::domain_error("inexact Laurent division");
        LaurentPoly t(c / lead, top - dtop);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag);
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly r;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return r;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse Laurent polynomial: " + text); };
    if (s.empty()) fail();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        std::int64_t c = 1;
        bool have_digits = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            c = std::stoll(s.substr(i, j - i));
            have_digits = true;
            i = j;
        }
        int e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                std::size_t m = k;
                while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
                if (m == k) fail();
                e = std::stoi(s.substr(i, m - i));
                i = m;
            }
        } else if (!have_digits) {
            fail();
        }
        r.add_term(e, sign * c);
    }
    return r;
}

}  // namespace klr
