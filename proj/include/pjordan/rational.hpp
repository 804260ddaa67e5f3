#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pjordan {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : error {
    using error::error;
};
struct arith_error : error {
    using error::error;
};
struct dim_error : error {
    using error::error;
};

// Arbitrary-precision rational, always reduced with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long int>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw arith_error("rational with zero denominator");
        q_ = mpq_class(static_cast<long int>(n), static_cast<long int>(d));
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw arith_error("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw arith_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const {
        if (is_zero()) throw arith_error("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(long e) const;

    std::string str() const;

private:
    mpq_class q_;
};

// Positive g with a/g, b/g integral and coprime; used for content extraction.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace pjordan
