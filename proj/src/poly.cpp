#include "braidix/poly.hpp"

#include <limits>
#include <sstream>

#include "braidix/errors.hpp"

namespace braidix {

void Poly::add_term(int a_exp, int z_exp, const Int& coeff) {
    if (coeff == 0) return;
    Key key{a_exp, z_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::mono(int a_exp, int z_exp, Int coeff) {
    Poly p;
    p.add_term(a_exp, z_exp, coeff);
    return p;
}

Poly Poly::delta_pow(int k) {
    if (k < 0) throw computation_error("delta_pow requires a non-negative power");
    // (a - a^-1)^k z^-k = sum_i (-1)^i C(k,i) a^(k-2i) z^-k
    Poly p;
    Int binom = 1;
    for (int i = 0; i <= k; ++i) {
        p.add_term(k - 2 * i, -k, (i % 2 == 0) ? binom : -binom);
        binom = binom * (k - i) / (i + 1);
    }
    return p;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key.first, key.second, coeff);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key.first, key.second, -coeff);
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly result;
    for (const auto& [lk, lc] : lhs.terms_) {
        for (const auto& [rk, rc] : rhs.terms_) {
            result.add_term(lk.first + rk.first, lk.second + rk.second, lc * rc);
        }
    }
    return result;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly Poly::operator-() const {
    Poly result;
    for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, -coeff);
    return result;
}

int Poly::a_max() const {
    if (terms_.empty()) throw computation_error("a_max of the zero polynomial is undefined");
    return terms_.begin()->first.first;  // first term has the largest a exponent
}

int Poly::a_min() const {
    if (terms_.empty()) throw computation_error("a_min of the zero polynomial is undefined");
    return terms_.rbegin()->first.first;
}

int Poly::z_max_at_a(int a_exp) const {
    // Terms with this a exponent are contiguous; the first one (largest key)
    // has the largest z exponent.
    auto it = terms_.lower_bound(Key{a_exp, std::numeric_limits<int>::max()});
    if (it != terms_.end() && it->first.first == a_exp) return it->first.second;
    throw computation_error("no term with a exponent " + std::to_string(a_exp));
}

Int Poly::coeff(int a_exp, int z_exp) const {
    auto it = terms_.find(Key{a_exp, z_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        const auto [a_exp, z_exp] = key;
        const bool negative = coeff < 0;
        Int magnitude = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string piece;
        if (magnitude != 1 || (a_exp == 0 && z_exp == 0)) piece = magnitude.str();
        auto append_var = [&piece](const char* name, int exp) {
            if (exp == 0) return;
            if (!piece.empty()) piece += "*";
            piece += name;
            if (exp != 1) piece += "^" + std::to_string(exp);
        };
        append_var("a", a_exp);
        append_var("z", z_exp);
        out << piece;
    }
    return out.str();
}

}  // namespace braidix
