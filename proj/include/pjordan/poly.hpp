#pragma once

#include "pjordan/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pjordan {

// Indeterminates: x[i,j]^k (compatible-structure unknowns, i < j),
// r[i,j] (operator matrix entries), or a named parameter. 1-based indices.
class Indet {
public:
    enum class Kind { X, R, Param };

    static Indet x(int i, int j, int k);
    static Indet r(int i, int j);
    static Indet param(std::string name);

    Kind kind() const { return kind_; }
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }
    const std::string& name() const { return name_; }

    std::string str() const;

    friend bool operator==(const Indet& a, const Indet& b) {
        return a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_ && a.k_ == b.k_ &&
               a.name_ == b.name_;
    }
    friend bool operator!=(const Indet& a, const Indet& b) { return !(a == b); }
    friend bool operator<(const Indet& a, const Indet& b);

private:
    Kind kind_ = Kind::Param;
    int i_ = 0, j_ = 0, k_ = 0;
    std::string name_;
};

// Product of indeterminate powers, sorted by indeterminate.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Indet& v, unsigned e = 1);

    const std::vector<std::pair<Indet, unsigned>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    unsigned degree() const;
    unsigned degree_in(const Indet& v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;
    Monomial divide(const Monomial& div) const;  // requires div | *this

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<std::pair<Indet, unsigned>> f_;
    friend bool grlex_less(const Monomial& a, const Monomial& b);
};

// Graded lexicographic order (degree first, then exponents along the
// indeterminate order).
bool grlex_less(const Monomial& a, const Monomial& b);

using Assignment = std::map<Indet, Scalar>;

// Multivariate polynomial over Q, stored in descending graded-lex order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(implicit)
    Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(const Indet& v);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].first.is_one(); }
    Rational constant_value() const;  // requires is_constant()
    unsigned total_degree() const;
    unsigned degree_in(const Indet& v) const;
    std::vector<Indet> variables() const;

    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scale(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b);  // canonical order

    // Gather coefficients of powers of v: result[e] = coefficient polynomial
    // of v^e (not containing v).
    std::vector<Polynomial> coefficients_in(const Indet& v) const;

    Polynomial substitute(const Indet& v, const Polynomial& value) const;
    Scalar evaluate(const Assignment& a) const;  // throws on missing variables

    // Positive gcd of all coefficients (0 for the zero polynomial).
    Rational content() const;
    // content-free, positive leading coefficient; canonical up to scale.
    Polynomial canonical_representative() const;

    // lambda with *this == lambda * q, if a nonzero rational ratio exists.
    friend std::optional<Rational> proportional_match(const Polynomial& p,
                                                      const Polynomial& q);

    // Remainder of multivariate division by divisors (grlex leading terms).
    Polynomial reduce(const std::vector<Polynomial>& divisors) const;

    std::string str() const;

private:
    void normalize();
    std::vector<std::pair<Monomial, Rational>> terms_;
};

std::optional<Rational> proportional_match(const Polynomial& p, const Polynomial& q);

}  // namespace pjordan
