#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qeuler/common.hpp"

namespace qeuler {

// Exponent pair of one term c * q^q_exp * x^x_exp.
// Terms are ordered by x-degree first, then q-degree; the same order is
// used for printing and serialization.
struct Monomial {
    int q_exp = 0;
    int x_exp = 0;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return std::tie(a.x_exp, a.q_exp) <=> std::tie(b.x_exp, b.q_exp);
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/**
 * Sparse bivariate polynomial in q and x with Int coefficients.
 *
 * Canonical form: the term map never stores a zero coefficient, so
 * structural equality of the maps is polynomial equality.  Exponents are
 * nonnegative; all operations are exact ring operations.
 */
class QXPoly {
public:
    QXPoly() = default;
    QXPoly(long long c) { add_term(0, 0, Int(c)); }  // NOLINT(google-explicit-constructor)
    QXPoly(Int c) { add_term(0, 0, std::move(c)); }  // NOLINT(google-explicit-constructor)

    static QXPoly monomial(Int c, int q_exp, int x_exp);
    static QXPoly q(int exp = 1) { return monomial(1, exp, 0); }
    static QXPoly x(int exp = 1) { return monomial(1, 0, exp); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    // Coefficient of q^q_exp * x^x_exp (zero when the term is absent).
    Int coeff(int q_exp, int x_exp) const;

    int max_q_degree() const;
    int max_x_degree() const;

    // Adds c * q^q_exp * x^x_exp, erasing the term if it cancels.
    void add_term(int q_exp, int x_exp, const Int& c);

    QXPoly& operator+=(const QXPoly& r);
    QXPoly& operator-=(const QXPoly& r);
    QXPoly& operator*=(const QXPoly& r);
    QXPoly operator-() const;

    friend QXPoly operator+(QXPoly a, const QXPoly& b) { return a += b; }
    friend QXPoly operator-(QXPoly a, const QXPoly& b) { return a -= b; }
    friend QXPoly operator*(const QXPoly& a, const QXPoly& b);

    friend bool operator==(const QXPoly&, const QXPoly&) = default;

    QXPoly times_scalar(const Int& c) const;
    // Multiplication by the monomial c * q^q_exp * x^x_exp.
    QXPoly times_monomial(int q_exp, int x_exp, const Int& c = Int(1)) const;

    Int eval(const Int& q_val, const Int& x_val) const;
    // Substitutes a constant for x, leaving a polynomial in q.
    QXPoly substitute_x(const Int& x_val) const;

    // Ascending q-coefficients [c0, c1, ...] of an x-free polynomial.
    // Throws std::logic_error if any term involves x.
    std::vector<Int> q_coefficients() const;

    bool has_negative_coeff() const;

    // Text form: terms in (x asc, q asc) order, e.g. "1+2*q+q^2" or "-1+x".
    std::string to_string() const;
    static QXPoly parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const QXPoly& p);

private:
    std::map<Monomial, Int> terms_;
};

// [n]_q scaled by `step`: returns the q-integer [n*step]_q = 1+q+...+q^{n*step-1}.
// Rejects n = 0 or step = 0.
QXPoly q_integer(int n, int step = 1);

// Gaussian binomial coefficient [n choose k] in the variable q^base_exponent,
// computed by the Pascal recurrence (integer arithmetic only).
// Requires 0 <= k <= n and base_exponent >= 1.
QXPoly q_binomial(int n, int k, int base_exponent = 1);

// prod_{j=a+1}^{b} [j*ell]_q; the empty product (a == b) is 1.  Requires a <= b.
QXPoly rising_flag_product(int a, int b, int ell);

}  // namespace qeuler
