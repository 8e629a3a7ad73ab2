#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace braidix {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in two variables a, z with arbitrary-precision integer
// coefficients.  Terms are kept in canonical order: a-exponent descending,
// then z-exponent descending.  Zero coefficients are never stored.
class Poly {
public:
    using Key = std::pair<int, int>;  // (a exponent, z exponent)
    using TermMap = std::map<Key, Int, std::greater<Key>>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return mono(0, 0, 1); }
    static Poly mono(int a_exp, int z_exp, Int coeff = 1);

    // (a - a^-1)^k * z^-k expanded via the binomial theorem; the polynomial
    // of a k+1 component trivial link equals delta_pow(k).
    static Poly delta_pow(int k);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly operator-() const;
    bool operator==(const Poly& other) const { return terms_ == other.terms_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Highest / lowest exponent of a across all terms.  Throws
    // computation_error when the polynomial is zero.
    int a_max() const;
    int a_min() const;
    int a_span() const { return a_max() - a_min(); }

    // Highest z exponent among terms with the given a exponent.  Throws
    // computation_error when no such term exists.
    int z_max_at_a(int a_exp) const;

    // Coefficient of a^a_exp z^z_exp (zero if absent).
    Int coeff(int a_exp, int z_exp) const;

    // Canonical text form, e.g. "-a^4 + a^2*z^2 + 2*a^2" or "0".
    std::string str() const;

private:
    TermMap terms_;

    void add_term(int a_exp, int z_exp, const Int& coeff);
};

}  // namespace braidix
