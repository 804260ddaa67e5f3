#include "pjordan/scalar.hpp"

#include <cctype>
#include <ostream>

namespace pjordan {

bool is_squarefree(std::int64_t d) {
    if (d == 0) return false;
    std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        std::int64_t sq = p * p;
        if (n % sq == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

Scalar::Scalar(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ == 0 || d_ == 1)
        throw arith_error("extension discriminant must not be 0 or 1");
    if (!is_squarefree(d_))
        throw arith_error("extension discriminant must be squarefree: " + std::to_string(d_));
}

const Rational& Scalar::as_rational() const {
    if (!is_rational()) throw arith_error("scalar is not rational: " + str());
    return a_;
}

std::int64_t Scalar::common_disc(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw arith_error("incompatible discriminants: sqrt(" + std::to_string(x.d_) +
                      ") vs sqrt(" + std::to_string(y.d_) + ")");
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    auto d = Scalar::common_disc(x, y);
    return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    auto d = Scalar::common_disc(x, y);
    return Scalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    auto d = Scalar::common_disc(x, y);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                  x.a_ * y.b_ + x.b_ * y.a_, d);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw arith_error("division by zero");
    if (is_rational()) return Scalar(a_.inv());
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 d); the norm is nonzero because
    // d is squarefree (so sqrt(d) is irrational) and (a, b) != (0, 0).
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(Rational(1));
    Scalar base = e < 0 ? inv() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc(Rational(1));
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator<(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string Scalar::str() const { return format_scalar(*this); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::string format_scalar(const Scalar& s) {
    if (s.is_rational()) return s.rat().str();
    std::string out = s.rat().str();
    out += s.irr().sign() < 0 ? "-" : "+";
    out += s.irr().abs().str();
    out += "*sqrt(" + std::to_string(s.disc()) + ")";
    return out;
}

namespace {

// R = optional-sign integer, optionally "/" positive-integer.
Rational parse_r(const std::string& text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw parse_error("expected integer at '" + text.substr(start) + "'");
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t ddigits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++ddigits;
        }
        if (ddigits == 0) throw parse_error("expected denominator in '" + text + "'");
    }
    return Rational::parse(text.substr(start, pos - start));
}

std::int64_t parse_disc(const std::string& text, size_t& pos) {
    const std::string kw = "sqrt(";
    if (text.compare(pos, kw.size(), kw) != 0)
        throw parse_error("expected sqrt( in scalar literal: " + text);
    pos += kw.size();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected integer inside sqrt(): " + text);
    std::int64_t d = std::stoll(text.substr(start, pos - start));
    if (pos >= text.size() || text[pos] != ')')
        throw parse_error("unterminated sqrt() in scalar literal: " + text);
    ++pos;
    return d;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("empty scalar literal");
    size_t pos = 0;
    Rational a = parse_r(t, pos);
    if (pos == t.size()) return Scalar(a);
    Rational sign(1);
    if (t[pos] == '+') {
        ++pos;
    } else if (t[pos] == '-') {
        sign = Rational(-1);
        ++pos;
    } else {
        throw parse_error("expected + or - in scalar literal: " + text);
    }
    Rational b = parse_r(t, pos);
    if (pos >= t.size() || t[pos] != '*')
        throw parse_error("expected *sqrt(d) in scalar literal: " + text);
    ++pos;
    std::int64_t d = parse_disc(t, pos);
    if (pos != t.size()) throw parse_error("trailing characters in scalar literal: " + text);
    b *= sign;
    if (b.is_zero()) return Scalar(a);
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw parse_error("discriminant must be squarefree and not 0 or 1: " + text);
    return Scalar(a, b, d);
}

}  // namespace pjordan
