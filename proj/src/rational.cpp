#include "pjordan/rational.hpp"

namespace pjordan {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        std::string dpart = text.substr(slash + 1);
        if (dpart.empty() || dpart[0] == '-' || dpart[0] == '+')
            throw parse_error("denominator must be a positive integer: " + text);
        mpz_class den(dpart);
        if (den == 0) throw parse_error("zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational literal: " + text);
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(pn, pd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(gn, gl);
}

}  // namespace pjordan
