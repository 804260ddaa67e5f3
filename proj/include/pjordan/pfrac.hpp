#pragma once

#include "pjordan/poly.hpp"

#include <string>

namespace pjordan {

// Ratio of polynomials over Q; denominators are tracked unreduced except for
// constant factors. Used for symbolic family matrices and parameter
// expressions, where entries like r13^3/(2*r23^2) occur.
class PolyFraction {
public:
    PolyFraction() : num_(), den_(Rational(1)) {}
    PolyFraction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
    PolyFraction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Polynomial as_polynomial() const;  // throws unless is_polynomial()

    PolyFraction operator-() const;
    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b);
    PolyFraction pow(long e) const;

    Scalar evaluate(const Assignment& a) const;

    std::string str() const;

private:
    void tidy();
    Polynomial num_, den_;
};

// Parses the scalar grammar extended with names, x[i,j]^k / r[i,j] atoms,
// + - * / ^ and parentheses; sqrt(INT) is rejected here (symbolic context).
PolyFraction parse_polyfraction(const std::string& text);

// Same grammar restricted to a polynomial result (constant denominator).
Polynomial parse_polynomial(const std::string& text);

// Full numeric evaluation: names are looked up in env; sqrt(INT) allowed.
Scalar parse_value(const std::string& text,
                   const std::map<std::string, Scalar>& env);

}  // namespace pjordan
