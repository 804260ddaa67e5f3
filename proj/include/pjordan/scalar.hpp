#pragma once

#include "pjordan/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pjordan {

// Element a + b*sqrt(d) of Q or a quadratic extension Q(sqrt(d)).
// Canonical form: b == 0 forces d == 0; otherwise d is squarefree, d != 0, 1.
// Values with different nonzero d cannot be combined.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(const Rational& a) : a_(a), b_(0), d_(0) {}  // NOLINT(implicit)
    Scalar(long n) : a_(n), b_(0), d_(0) {}             // NOLINT(implicit)
    Scalar(long n, long d) : a_(n, d), b_(0), d_(0) {}
    Scalar(const Rational& a, const Rational& b, std::int64_t d);

    static Scalar sqrt_of(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rat() const & { return a_; }
    const Rational& irr() const & { return b_; }
    std::int64_t disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }
    bool is_rational() const { return b_.is_zero(); }
    // Throws unless rational.
    const Rational& as_rational() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar conj() const { return Scalar(a_, -b_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    // Total order for use as a map key (not a numeric order).
    friend bool operator<(const Scalar& x, const Scalar& y);

    std::string str() const;

private:
    static std::int64_t common_disc(const Scalar& x, const Scalar& y);
    Rational a_, b_;
    std::int64_t d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_squarefree(std::int64_t d);

// Text grammar: R | R "+" R "*sqrt(" INT ")" | R "-" R "*sqrt(" INT ")",
// R = optional-sign integer or integer "/" positive-integer.
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& s);

}  // namespace pjordan
